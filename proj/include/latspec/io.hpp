#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latspec/birkhoff.hpp"
#include "latspec/dlat.hpp"
#include "latspec/errors.hpp"
#include "latspec/lathom.hpp"
#include "latspec/report.hpp"
#include "latspec/spectrum.hpp"

namespace latspec {

// Lattice files, one directive per line, `#` to end of line is a comment:
//
//   chain: 3                   n-element chain
//   product: 3 3               product of chains
//   elements: t u v            base poset (lattice = its downsets) ...
//   covers: t<u t<v            ... with strict order pairs
//   elements: 0 a b 1          explicit lattice ...
//   leq: 0<a 0<b a<1 b<1       ... with order pairs (closed transitively)
//
// Hom files hold `[domain]`, `[codomain]` and `[map]` sections; map lines
// read `x -> y` with element labels.

struct Token {
  std::string text;
  std::size_t line = 1, col = 1;
};

struct SourceLine {
  std::size_t number = 1;
  std::string text;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline std::vector<SourceLine> split_lines(std::string_view src, std::size_t first = 1) {
  std::vector<SourceLine> out;
  std::size_t n = first, start = 0;
  while (start <= src.size()) {
    std::size_t end = src.find('\n', start);
    if (end == std::string_view::npos) end = src.size();
    std::string line(src.substr(start, end - start));
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back({n++, std::move(line)});
    start = end + 1;
  }
  return out;
}

inline std::vector<Token> words(const SourceLine& l, std::size_t from) {
  std::vector<Token> out;
  const std::string& s = l.text;
  std::size_t i = from;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), l.number, i + 1});
    i = j;
  }
  return out;
}

inline bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

inline std::size_t parse_count(const Token& t) {
  if (t.text.empty() || t.text.size() > 9) throw ParseError("expected a positive count", t.line, t.col);
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected a positive count", t.line, t.col);
  const std::size_t n = std::stoul(t.text);
  if (n == 0) throw ParseError("a chain needs at least one element", t.line, t.col);
  return n;
}

inline std::string join_names(const std::vector<std::string>& names, const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k)
    s += (k ? ", " : "") + (idx[k] < names.size() ? names[idx[k]] : std::to_string(idx[k]));
  return s;
}

}  // namespace detail

/// Parse a lattice from directive lines. Validation failures (cycles, a
/// missing bound, non-distributivity) are reported as ParseError at the
/// directive that introduced the offending relation, naming the witness.
inline DLat parse_lattice_lines(const std::vector<SourceLine>& lines) {
  std::optional<Token> kind_tok;
  std::string kind;
  std::vector<Token> elements, pairs, counts;
  std::optional<Token> rel_tok;
  for (const auto& l : lines) {
    if (detail::blank(l.text)) continue;
    const auto colon = l.text.find(':');
    std::size_t lead = 0;
    while (lead < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[lead]))) ++lead;
    if (colon == std::string::npos) throw ParseError("expected 'directive: values'", l.number, lead + 1);
    std::string key = l.text.substr(lead, colon - lead);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    const Token here{key, l.number, lead + 1};
    auto vals = detail::words(l, colon + 1);
    if (key == "chain" || key == "product") {
      if (kind_tok) throw ParseError("lattice already declared", here.line, here.col);
      kind_tok = here;
      kind = key;
      if (vals.empty()) throw ParseError("expected chain lengths", l.number, colon + 2);
      if (key == "chain" && vals.size() != 1) throw ParseError("chain takes one length", vals[1].line, vals[1].col);
      counts = std::move(vals);
    } else if (key == "elements") {
      if (kind_tok && kind != "elements") throw ParseError("lattice already declared", here.line, here.col);
      kind_tok = here;
      kind = "elements";
      for (auto& v : vals) elements.push_back(std::move(v));
    } else if (key == "covers" || key == "leq") {
      if (rel_tok && rel_tok->text != key)
        throw ParseError("covers and leq cannot be mixed", here.line, here.col);
      rel_tok = here;
      for (auto& v : vals) pairs.push_back(std::move(v));
    } else {
      throw ParseError("unknown directive '" + key + "'", here.line, here.col);
    }
  }
  if (!kind_tok) {
    const std::size_t ln = lines.empty() ? 1 : lines.front().number;
    throw ParseError("no lattice declared", ln, 1);
  }
  if (kind != "elements") {
    if (rel_tok) throw ParseError(rel_tok->text + " needs an elements list", rel_tok->line, rel_tok->col);
    std::vector<std::size_t> lens;
    for (const auto& t : counts) lens.push_back(detail::parse_count(t));
    try {
      if (kind == "chain") return DLat::chain(lens[0]);
      return DLat::chain_product(lens);
    } catch (const LatticeError& e) {
      throw ParseError(e.what(), kind_tok->line, kind_tok->col);
    }
  }
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (const auto& t : elements) {
    if (!index.emplace(t.text, names.size()).second)
      throw ParseError("duplicate element '" + t.text + "'", t.line, t.col);
    names.push_back(t.text);
  }
  if (names.empty()) throw ParseError("empty elements list", kind_tok->line, kind_tok->col);
  const bool explicit_lattice = rel_tok && rel_tok->text == "leq";
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (const auto& t : pairs) {
    std::size_t op = t.text.find("<=");
    std::size_t width = 2;
    if (op == std::string::npos) {
      op = t.text.find('<');
      width = 1;
    }
    if (op == std::string::npos || op == 0 || op + width >= t.text.size())
      throw ParseError("expected a pair 'x<y'", t.line, t.col);
    if (width == 2 && !explicit_lattice) throw ParseError("covers are strict: use 'x<y'", t.line, t.col);
    const std::string lo = t.text.substr(0, op), hi = t.text.substr(op + width);
    auto lo_it = index.find(lo), hi_it = index.find(hi);
    if (lo_it == index.end()) throw ParseError("unknown element '" + lo + "'", t.line, t.col);
    if (hi_it == index.end()) throw ParseError("unknown element '" + hi + "'", t.line, t.col + op + width);
    if (lo_it->second == hi_it->second) {
      if (width == 2) continue;
      throw ParseError("strict pair relates '" + lo + "' to itself", t.line, t.col);
    }
    less.emplace_back(lo_it->second, hi_it->second);
  }
  const Token& at = rel_tok ? *rel_tok : *kind_tok;
  Poset p(0);
  try {
    p = Poset::from_covers(names.size(), less, names);
  } catch (const PosetError& e) {
    throw ParseError(std::string(e.what()) + " (" + detail::join_names(names, e.witness()) + ")", at.line, at.col);
  }
  if (!explicit_lattice) {
    try {
      return DLat::downsets(p);
    } catch (const LatticeError& e) {
      throw ParseError(e.what(), at.line, at.col);
    }
  }
  std::vector<std::vector<bool>> leq(names.size(), std::vector<bool>(names.size()));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j) leq[i][j] = p.leq(i, j);
  try {
    return to_dlat(RawLattice::from_order(leq, names));
  } catch (const LatticeError& e) {
    throw ParseError(std::string(e.what()) + " (" + detail::join_names(names, e.witness()) + ")", at.line, at.col);
  }
}

inline DLat parse_lattice(std::string_view src) { return parse_lattice_lines(detail::split_lines(src)); }

inline DLat load_lattice(const std::string& path) { return parse_lattice(read_text_file(path)); }

/// Element named by a label; whitespace inside the label is ignored.
inline std::optional<std::size_t> find_element(const DLat& d, std::string s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.label(i) == t) return i;
  return std::nullopt;
}

inline LatHom parse_hom(std::string_view src) {
  const auto lines = detail::split_lines(src);
  std::map<std::string, std::vector<SourceLine>> sec;
  std::map<std::string, std::size_t> sec_line;
  std::string cur;
  for (const auto& l : lines) {
    std::size_t lead = 0;
    while (lead < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[lead]))) ++lead;
    if (lead < l.text.size() && l.text[lead] == '[') {
      const auto close = l.text.find(']', lead);
      if (close == std::string::npos) throw ParseError("missing ']'", l.number, lead + 1);
      cur = l.text.substr(lead + 1, close - lead - 1);
      if (cur != "domain" && cur != "codomain" && cur != "map")
        throw ParseError("unknown section '" + cur + "'", l.number, lead + 2);
      if (sec_line.count(cur)) throw ParseError("duplicate section '" + cur + "'", l.number, lead + 1);
      if (!detail::blank(l.text.substr(close + 1))) throw ParseError("text after section header", l.number, close + 2);
      sec_line[cur] = l.number;
      sec[cur];
      continue;
    }
    if (detail::blank(l.text)) continue;
    if (cur.empty()) throw ParseError("text before the first section", l.number, lead + 1);
    sec[cur].push_back(l);
  }
  for (const char* s : {"domain", "codomain", "map"})
    if (!sec_line.count(s)) throw ParseError(std::string("missing section [") + s + "]", lines.back().number, 1);
  const DLat dom = parse_lattice_lines(sec["domain"]);
  const DLat cod = parse_lattice_lines(sec["codomain"]);
  std::vector<std::optional<std::size_t>> table(dom.size());
  for (const auto& l : sec["map"]) {
    const auto arrow = l.text.find("->");
    if (arrow == std::string::npos) throw ParseError("expected 'x -> y'", l.number, 1);
    const std::string lhs = l.text.substr(0, arrow), rhs = l.text.substr(arrow + 2);
    const auto x = find_element(dom, lhs);
    if (!x) throw ParseError("unknown domain element '" + lhs + "'", l.number, 1);
    const auto y = find_element(cod, rhs);
    if (!y) throw ParseError("unknown codomain element '" + rhs + "'", l.number, arrow + 3);
    if (table[*x]) throw ParseError("element mapped twice", l.number, 1);
    table[*x] = *y;
  }
  const std::size_t ml = sec_line["map"];
  std::vector<std::size_t> t;
  for (std::size_t x = 0; x < dom.size(); ++x) {
    if (!table[x]) throw ParseError("no image for '" + dom.label(x) + "'", ml, 1);
    t.push_back(*table[x]);
  }
  try {
    return LatHom(dom, cod, std::move(t));
  } catch (const HomError& e) {
    std::string w;
    for (auto i : e.witness()) w += (w.empty() ? "" : ", ") + dom.label(i);
    throw ParseError(std::string(e.what()) + " (" + w + ")", ml, 1);
  }
}

inline LatHom load_hom(const std::string& path) { return parse_hom(read_text_file(path)); }

// JSON.

inline Json lattice_to_json(const DLat& d) {
  Json j;
  const Poset& b = d.base();
  j["points"] = b.names();
  Json covers = Json::array();
  for (auto [lo, hi] : b.covers()) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  j["elements"] = d.elements();
  Json labels = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) labels.push_back(d.label(i));
  j["labels"] = std::move(labels);
  return j;
}

/// Inverse of lattice_to_json; covers are point index pairs. An `elements` list, when present, must
/// equal the canonical encoding of the rebuilt lattice.
inline DLat lattice_from_json(const Json& j) {
  try {
    const auto names = j.at("points").get<std::vector<std::string>>();
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (const auto& c : j.at("covers")) less.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    DLat d = DLat::downsets(Poset::from_covers(names.size(), less, names));
    if (j.contains("elements") && j["elements"].get<std::vector<Mask>>() != d.elements())
      throw LatticeError("element encoding does not match the base poset");
    if (j.contains("labels")) d.set_labels(j["labels"].get<std::vector<std::string>>());
    return d;
  } catch (const Json::exception& e) {
    throw LatticeError(std::string("malformed lattice JSON: ") + e.what());
  }
}

inline Json hom_to_json(const LatHom& f) {
  Json j;
  j["domain"] = lattice_to_json(f.dom());
  j["codomain"] = lattice_to_json(f.cod());
  j["table"] = f.table();
  return j;
}

inline LatHom hom_from_json(const Json& j) {
  try {
    return LatHom(lattice_from_json(j.at("domain")), lattice_from_json(j.at("codomain")),
                  j.at("table").get<std::vector<std::size_t>>());
  } catch (const Json::exception& e) {
    throw LatticeError(std::string("malformed hom JSON: ") + e.what());
  }
}

// DOT.

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Cover pairs (lower, upper) of the element order: y is covered by x iff
/// y is x minus one maximal point of x.
inline std::vector<std::pair<std::size_t, std::size_t>> element_covers(const DLat& d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const Poset& b = d.base();
  for (std::size_t x = 0; x < d.size(); ++x) {
    const Mask m = d.element(x);
    for (std::size_t p = 0; p < b.size(); ++p)
      if (has_bit(m, p) && (b.up(p) & m) == bit(p)) out.emplace_back(*d.index_of(m & ~bit(p)), x);
  }
  return out;
}

inline std::string hasse_dot(const DLat& d, const std::string& name = "lattice") {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < d.size(); ++i) os << "  e" << i << " [label=" << detail::dot_quote(d.label(i)) << "];\n";
  for (auto [lo, hi] : element_covers(d)) os << "  e" << lo << " -> e" << hi << ";\n";
  os << "}\n";
  return os.str();
}

/// Prime spectrum ordered by inclusion, drawn by covers. Point k is the
/// prime ideal missing base point k.
inline std::string spectrum_dot(const DLat& d, const std::string& name = "spectrum") {
  const Spectrum sp = prime_spectrum(d);
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n";
  const std::size_t k = sp.points.size();
  for (std::size_t p = 0; p < k; ++p)
    os << "  p" << p << " [label=" << detail::dot_quote("P_" + d.base().name(p)) << "];\n";
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      if (p == q || !sp.order[p][q]) continue;
      bool cover = true;
      for (std::size_t r = 0; r < k && cover; ++r)
        cover = r == p || r == q || !(sp.order[p][r] && sp.order[r][q]);
      if (cover) os << "  p" << p << " -> p" << q << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace latspec
