#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace latspec {

// int64 arithmetic that throws instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline int sign(std::int64_t a) { return (a > 0) - (a < 0); }

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0, den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = checked_neg(n);
      d = checked_neg(d);
    }
    const std::int64_t g = std::gcd(n, d);
    return {n / g, d / g};
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace latspec
