#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace latspec {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named list of pass/fail checks plus structured data for JSON output.
struct Report {
  std::string title;
  std::vector<Check> checks;
  Json data = Json::object();

  Report& check(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
    return *this;
  }

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }

  void append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back({other.title + ": " + c.name, c.passed, c.detail});
    data[other.title] = other.data;
  }

  Json to_json() const {
    Json j;
    j["title"] = title;
    j["passed"] = passed();
    Json cs = Json::array();
    for (const auto& c : checks) {
      Json e;
      e["name"] = c.name;
      e["passed"] = c.passed;
      if (!c.detail.empty()) e["detail"] = c.detail;
      cs.push_back(std::move(e));
    }
    j["checks"] = std::move(cs);
    j["data"] = data;
    return j;
  }

  void print(std::ostream& os) const {
    os << title << ": " << (passed() ? "pass" : "FAIL") << '\n';
    for (const auto& c : checks) {
      os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) os << " -- " << c.detail;
      os << '\n';
    }
  }

  std::string text() const {
    std::ostringstream os;
    print(os);
    return os.str();
  }
};

}  // namespace latspec
