#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latspec/birkhoff.hpp"
#include "latspec/condensate.hpp"
#include "latspec/glambda.hpp"
#include "latspec/hom_analysis.hpp"
#include "latspec/io.hpp"
#include "latspec/normality.hpp"
#include "latspec/pl_term.hpp"
#include "latspec/replication.hpp"
#include "latspec/report.hpp"
#include "latspec/spectrum.hpp"

namespace latspec::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct Options {
  bool json = false;
  bool dot = false;
  std::uint64_t seed = 1;
};

/// Error in command arguments, as opposed to malformed file contents.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_source(const std::string& arg) {
  return !arg.empty() && arg[0] == '@' ? read_text_file(arg.substr(1)) : arg;
}

inline PLFun pl_arg(const std::string& arg) { return evaluate(parse_pl_term(read_source(arg))); }

inline GLambdaElem glambda_arg(const std::string& arg) { return parse_glambda(read_source(arg)); }

inline Rational rational_arg(const std::string& s) {
  static const std::regex re(R"(^\s*(-?\d+)(?:/(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("expected a rational 'p' or 'p/q', got '" + s + "'");
  try {
    return Rational::make(std::stoll(m[1]), m[2].matched ? std::stoll(m[2]) : 1);
  } catch (const std::out_of_range&) {
    throw UsageError("number out of range: '" + s + "'");
  }
}

inline std::size_t element_arg(const DLat& d, const std::string& s) {
  auto x = find_element(d, s);
  if (!x) throw UsageError("no element labelled '" + s + "'");
  return *x;
}

inline std::vector<std::string> labels(const DLat& d, const std::vector<std::size_t>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(d.label(x));
  return out;
}

// Commands.

inline Report lattice_check(const DLat& d, const Options& o) {
  Report r;
  r.title = "lattice check";
  r.data["size"] = d.size();
  r.data["join_irreducibles"] = labels(d, d.join_irreducibles());
  const auto w = normality_violation(d);
  r.data["completely_normal"] = !w;
  if (w) r.data["normality_witness"] = labels(d, {w->first, w->second});
  const Spectrum sp = prime_spectrum(d);
  Json pts = Json::array();
  for (std::size_t p = 0; p < sp.points.size(); ++p) pts.push_back("P_" + d.base().name(p));
  r.data["spectrum_points"] = std::move(pts);
  Json order = Json::array();
  for (auto [lo, hi] : d.base().covers()) order.push_back({"P_" + d.base().name(lo), "P_" + d.base().name(hi)});
  r.data["spectrum_covers"] = std::move(order);
  const Finding su = stone_unit_check(d);
  r.check("Stone unit is a lattice embedding into the spectrum's downsets", su.passed, su.witness);
  if (d.size() <= 256) r.check("Birkhoff round trip", to_dlat(RawLattice::from_dlat(d)) == d);
  if (o.json) r.data["lattice"] = lattice_to_json(d);
  return r;
}

inline Report hom_check(const LatHom& f, const Options& o) {
  Report r;
  r.title = "hom check";
  const HomCensus c = hom_census(f);
  r.data["table"] = detail::table_labels(f);
  r.data["preserves_zero"] = c.preserves_zero;
  r.data["preserves_top"] = c.preserves_top;
  r.data["surjective"] = c.surjective;
  r.data["embedding"] = c.embedding;
  r.data["cofinal"] = c.cofinal;
  r.data["closed"] = c.closed;
  if (c.closed_witness)
    r.data["closed_witness"] = {{"a0", f.dom().label(c.closed_witness->a0)},
                                {"a1", f.dom().label(c.closed_witness->a1)},
                                {"b", f.cod().label(c.closed_witness->b)}};
  if (c.convex) r.data["convex"] = *c.convex;
  else r.data["convex"] = nullptr;
  if (c.convex_witness)
    r.data["convex_witness"] = {{"P", detail::set_labels(f.dom(), c.convex_witness->P)},
                                {"Q0", detail::set_labels(f.cod(), c.convex_witness->Q0)},
                                {"J", detail::set_labels(f.cod(), c.convex_witness->J)}};
  if (o.json) r.data["hom"] = hom_to_json(f);
  return r;
}

inline Report v0_expand(const DLat& d, const std::vector<std::string>& pin_args) {
  if (pin_args.size() % 3 != 0) throw UsageError("--pin takes three labels: x y value");
  DiffPins pins;
  for (std::size_t k = 0; k < pin_args.size(); k += 3)
    pins[{element_arg(d, pin_args[k]), element_arg(d, pin_args[k + 1])}] = element_arg(d, pin_args[k + 2]);
  if (auto w = normality_violation(d))
    throw LatticeError("lattice is not completely normal: (" + d.label(w->first) + ", " + d.label(w->second) +
                       ") has no splitting");
  const V0Lat v = expand_v0(d, pins);
  Report r;
  r.title = "v0 expand";
  const auto w = v.identity_violation();
  r.check("(x∧y)∨(x∖y) = x and (x∖y)∧(y∖x) = 0 on every pair", !w,
          w ? "identity " + std::to_string(w->first) + " at (" + d.label(w->second.first) + ", " +
                  d.label(w->second.second) + ")"
            : "");
  std::vector<std::string> rows;
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y)
      if (x != y) rows.push_back(d.label(x) + " ∖ " + d.label(y) + " = " + d.label(v.diff(x, y)));
  r.data["pins"] = pins.size();
  r.data["differences"] = rows;
  r.data["triangle_failures"] = v.triangle_failures(std::size_t{1} << 20).size();
  return r;
}

inline Report refine(const DLat& d, const std::vector<std::string>& family_args) {
  std::vector<std::size_t> fam;
  for (const auto& s : family_args) fam.push_back(element_arg(d, s));
  Report r;
  r.title = "refine witness";
  r.data["family"] = labels(d, fam);
  const auto w = refinement_witness(d, fam);
  r.data["exists"] = w.has_value();
  if (w) {
    r.check("witness satisfies the refinement conditions", check_refinement(d, *w));
    Json m = Json::array();
    for (const auto& row : w->c) m.push_back(labels(d, row));
    r.data["matrix"] = std::move(m);
  }
  return r;
}

struct CondArgs {
  std::string kernel = "eps";
  std::string hom_file;
  std::string universe = "uncountable";
  std::size_t stage = 1;
  bool surjection = false;
};

inline Report cond_stage(const CondArgs& a) {
  LatHom phi;
  if (!a.hom_file.empty()) {
    phi = load_hom(a.hom_file);
  } else if (a.kernel == "eps") {
    phi = epsilon_kernel();
  } else if (a.kernel == "phi") {
    phi = phi_kernel();
  } else if (a.kernel.rfind("id:", 0) == 0) {
    const std::string n = a.kernel.substr(3);
    if (n.empty() || n.size() > 3 || !std::all_of(n.begin(), n.end(), ::isdigit) || std::stoul(n) == 0)
      throw UsageError("id kernel needs a chain length, e.g. id:4");
    phi = LatHom::identity(DLat::chain(std::stoul(n)));
  } else {
    throw UsageError("unknown kernel '" + a.kernel + "' (eps, phi, id:N)");
  }
  IndexUniverse u = IndexUniverse::uncountable();
  std::vector<std::string> names;
  if (a.universe == "countable") {
    u = IndexUniverse::countable();
  } else if (a.universe.rfind("finite:", 0) == 0) {
    const std::string n = a.universe.substr(7);
    if (n.empty() || n.size() > 3 || !std::all_of(n.begin(), n.end(), ::isdigit))
      throw UsageError("finite universe needs a size, e.g. finite:3");
    for (std::size_t i = 1; i <= std::stoul(n); ++i) names.push_back("i" + std::to_string(i));
    u = IndexUniverse::finite(names);
  } else if (a.universe != "uncountable") {
    throw UsageError("unknown universe '" + a.universe + "' (finite:N, countable, uncountable)");
  }
  if (a.stage > 6) throw UsageError("stage size is limited to 6");
  std::vector<std::string> J;
  for (std::size_t i = 1; i <= a.stage; ++i) J.push_back("i" + std::to_string(i));
  const Condensate c = Condensate::make(phi, u);
  Report r;
  r.title = "cond stage";
  r.data["kernel"] = detail::table_labels(phi);
  r.data["universe"] = u.cardinality_tag();
  r.data["stage"] = J;
  const auto elems = c.stage(J);
  r.data["stage_size"] = elems.size();
  if (elems.size() <= 256) {
    std::vector<std::string> ls;
    for (const auto& e : elems) ls.push_back(c.label(e));
    r.data["elements"] = ls;
  }
  r.append(finite_stage_iso(c, J));
  if (a.surjection) {
    const Condensate src = Condensate::make(LatHom::identity(phi.dom()), u);
    r.append(verify_almost_constant_surjection(src, c, J));
  }
  return r;
}

inline Report pl_eval(const std::string& term, const std::string& at) {
  const PLFun f = pl_arg(term);
  const auto comma = at.find(',');
  if (comma == std::string::npos) throw UsageError("--at expects 'x,y'");
  const Rational x = rational_arg(at.substr(0, comma)), y = rational_arg(at.substr(comma + 1));
  Report r;
  r.title = "pl eval";
  r.data["function"] = f.to_string();
  r.data["point"] = x.to_string() + "," + y.to_string();
  r.data["value"] = f.eval(x, y).to_string();
  return r;
}

inline Report pl_op(const std::string& op, const std::vector<std::string>& args) {
  std::vector<PLFun> fs;
  for (const auto& a : args) fs.push_back(pl_arg(a));
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (fs.size() < lo || fs.size() > hi) throw UsageError("wrong number of operands for '" + op + "'");
  };
  PLFun out;
  if (op == "neg" || op == "abs" || op == "pos" || op == "negpart") {
    need(1, 1);
    out = op == "neg" ? -fs[0] : op == "abs" ? fs[0].abs() : op == "pos" ? fs[0].pos() : fs[0].negpart();
  } else if (op == "diff") {
    need(2, 2);
    out = fs[0].diff(fs[1]);
  } else if (op == "add" || op == "sub" || op == "join" || op == "meet") {
    need(op == "sub" ? 2 : 1, SIZE_MAX);
    out = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i)
      out = op == "add" ? out + fs[i] : op == "sub" ? out - fs[i] : op == "join" ? out.join(fs[i]) : out.meet(fs[i]);
  } else {
    throw UsageError("unknown operation '" + op + "'");
  }
  Report r;
  r.title = "pl op";
  r.data["op"] = op;
  r.data["result"] = out.to_string();
  r.data["nonnegative"] = out.nonnegative();
  return r;
}

inline Report pl_ideal_leq(const std::string& xa, const std::string& ya, std::size_t samples, std::uint64_t seed) {
  const PLFun x = pl_arg(xa), y = pl_arg(ya);
  const IdealLeq res = ideal_leq(x, y);
  Report r;
  r.title = "pl ideal-leq";
  r.data["holds"] = res.holds;
  if (res.holds) r.data["bound"] = res.bound;
  if (res.witness) r.data["witness_ray"] = res.witness->to_string();
  if (samples > 0) {
    r.data["samples"] = samples;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> c(0, 1000);
    const PLFun ax = x.abs(), ay = y.abs();
    std::string bad;
    for (std::size_t s = 0; s < samples && bad.empty(); ++s) {
      std::int64_t p = c(rng), q = c(rng);
      if (p == 0 && q == 0) p = 1;
      if (res.holds && ax.at(p, q) > checked_mul(res.bound, ay.at(p, q)))
        bad = "|x| > n|y| at (" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    if (res.holds) r.check("|x| ≤ n|y| at every sample point", bad.empty(), bad);
    if (res.witness)
      r.check("witness ray has |y| = 0 < |x|", ay.at(*res.witness) == 0 && ax.at(*res.witness) > 0);
  }
  return r;
}

inline Report pl_connected(const std::string& term) {
  const PLFun f = pl_arg(term);
  Report r;
  r.title = "pl connected";
  r.data["function"] = f.to_string();
  r.data["components"] = support_components(f);
  r.data["connected"] = support_connected(f);
  return r;
}

inline Report glambda_op(const std::string& op, const std::vector<std::string>& args) {
  std::vector<GLambdaElem> xs;
  for (const auto& a : args) xs.push_back(glambda_arg(a));
  auto need = [&](std::size_t n) {
    if (xs.size() != n) throw UsageError("'" + op + "' takes " + std::to_string(n) + " operand(s)");
  };
  Report r;
  r.title = "glambda op";
  r.data["op"] = op;
  if (op == "neg" || op == "abs") {
    need(1);
    r.data["result"] = (op == "neg" ? -xs[0] : xs[0].abs()).to_string();
  } else if (op == "add" || op == "sub" || op == "join" || op == "meet") {
    need(2);
    const GLambdaElem& a = xs[0];
    const GLambdaElem& b = xs[1];
    r.data["result"] = (op == "add" ? a + b : op == "sub" ? a - b : op == "join" ? a.join(b) : a.meet(b)).to_string();
  } else if (op == "compare") {
    need(2);
    r.data["result"] = to_string(xs[0].compare(xs[1]));
  } else if (op == "ideal-leq") {
    need(2);
    r.data["result"] = ideal_leq(xs[0], xs[1]);
  } else {
    throw UsageError("unknown operation '" + op + "'");
  }
  return r;
}

inline Report glambda_waybelow(const std::string& xa, const std::string& ya) {
  const GLambdaElem x = glambda_arg(xa), y = glambda_arg(ya);
  Report r;
  r.title = "glambda waybelow";
  r.data["way_below"] = way_below(x, y);
  return r;
}

inline Report glambda_ortho(const std::vector<std::string>& args) {
  std::vector<GLambdaElem> xs;
  for (const auto& a : args) xs.push_back(glambda_arg(a));
  return orthogonal_set_check(xs);
}

// Output.

inline void print_text(std::ostream& os, const Report& r) {
  r.print(os);
  for (const auto& [k, v] : r.data.items()) {
    if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_string(); }) &&
        v.size() > 4) {
      os << "  " << k << ":\n";
      for (const auto& e : v) os << "    " << e.get<std::string>() << '\n';
    } else if (v.is_string()) {
      os << "  " << k << ": " << v.get<std::string>() << '\n';
    } else {
      os << "  " << k << ": " << v.dump() << '\n';
    }
  }
}

inline void emit(std::ostream& out, const std::vector<Report>& rs, const Options& o) {
  if (o.json) {
    Json j;
    j["seed"] = o.seed;
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : rs) {
      ok = ok && r.passed();
      arr.push_back(r.to_json());
    }
    j["passed"] = ok;
    j["reports"] = std::move(arr);
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& r : rs) print_text(out, r);
}

/// Run the command line `args` (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite distributive lattices, completely normal expansions, PL functions and counterexample replays."};
  app.name("latspec");
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable JSON output");
  app.add_flag("--dot", o.dot, "DOT output (lattice check)");
  app.add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();

  std::function<std::vector<Report>()> action;
  std::string dot_text;
  bool dot_ok = false;

  auto* lat = app.add_subcommand("lattice", "lattice commands")->require_subcommand(1);
  std::string lat_file;
  auto* lc = lat->add_subcommand("check", "complete normality, spectrum and Stone unit");
  lc->add_option("file", lat_file, "lattice file")->required();
  lc->callback([&] {
    dot_ok = true;
    action = [&] {
      const DLat d = load_lattice(lat_file);
      if (o.dot) dot_text = hasse_dot(d) + spectrum_dot(d);
      return std::vector<Report>{lattice_check(d, o)};
    };
  });

  auto* hom = app.add_subcommand("hom", "homomorphism commands")->require_subcommand(1);
  std::string hom_file;
  auto* hc = hom->add_subcommand("check", "census: embedding, surjective, cofinal, closed, convex");
  hc->add_option("file", hom_file, "hom file")->required();
  hc->callback([&] { action = [&] { return std::vector<Report>{hom_check(load_hom(hom_file), o)}; }; });

  auto* v0 = app.add_subcommand("v0", "V0 expansion")->require_subcommand(1);
  std::string v0_file;
  std::vector<std::string> pins;
  auto* ve = v0->add_subcommand("expand", "expand a completely normal lattice with a difference operation");
  ve->add_option("file", v0_file, "lattice file")->required();
  ve->add_option("--pin", pins, "fix x∖y = v (three labels; repeatable)")->expected(3)->take_all();
  ve->callback([&] { action = [&] { return std::vector<Report>{v0_expand(load_lattice(v0_file), pins)}; }; });

  auto* ref = app.add_subcommand("refine", "refinement witnesses")->require_subcommand(1);
  std::string ref_file;
  std::vector<std::string> family;
  auto* rw = ref->add_subcommand("witness", "search for a refinement matrix of a family");
  rw->add_option("file", ref_file, "lattice file")->required();
  rw->add_option("elements", family, "family members by label")->required();
  rw->callback([&] { action = [&] { return std::vector<Report>{refine(load_lattice(ref_file), family)}; }; });

  auto* cond = app.add_subcommand("cond", "condensates")->require_subcommand(1);
  CondArgs ca;
  auto* cs = cond->add_subcommand("stage", "finite stage of Cond(phi, I)");
  cs->add_option("--kernel", ca.kernel, "eps, phi or id:N")->capture_default_str();
  cs->add_option("--hom", ca.hom_file, "kernel from a hom file");
  cs->add_option("--universe", ca.universe, "finite:N, countable or uncountable")->capture_default_str();
  cs->add_option("--stage", ca.stage, "number of indices in the stage")->capture_default_str();
  cs->add_flag("--surjection", ca.surjection, "also verify the almost-constant surjection");
  cs->callback([&] { action = [&] { return std::vector<Report>{cond_stage(ca)}; }; });

  auto* pl = app.add_subcommand("pl", "piecewise-linear functions; TERM or @file")->require_subcommand(1);
  std::string t1, t2, at = "1,1", op;
  std::vector<std::string> terms;
  std::size_t samples = 0;
  auto* pe = pl->add_subcommand("eval", "evaluate a term at a point");
  pe->add_option("term", t1)->required();
  pe->add_option("--at", at, "point x,y (rationals)")->capture_default_str();
  pe->callback([&] { action = [&] { return std::vector<Report>{pl_eval(t1, at)}; }; });
  auto* po = pl->add_subcommand("op", "apply add|sub|join|meet|diff|neg|abs|pos|negpart");
  po->add_option("op", op)->required();
  po->add_option("terms", terms)->required();
  po->callback([&] { action = [&] { return std::vector<Report>{pl_op(op, terms)}; }; });
  auto* pi = pl->add_subcommand("ideal-leq", "is <x> contained in <y>");
  pi->add_option("x", t1)->required();
  pi->add_option("y", t2)->required();
  pi->add_option("--samples", samples, "confirm the bound at this many seeded points");
  pi->callback([&] { action = [&] { return std::vector<Report>{pl_ideal_leq(t1, t2, samples, o.seed)}; }; });
  auto* pc = pl->add_subcommand("connected", "connectedness of the support");
  pc->add_option("term", t1)->required();
  pc->callback([&] { action = [&] { return std::vector<Report>{pl_connected(t1)}; }; });

  auto* gl = app.add_subcommand("glambda", "lexicographic products; '<k0,...> TERM' or @file")->require_subcommand(1);
  auto* go = gl->add_subcommand("op", "apply add|sub|join|meet|neg|abs|compare|ideal-leq");
  go->add_option("op", op)->required();
  go->add_option("elements", terms)->required();
  go->callback([&] { action = [&] { return std::vector<Report>{glambda_op(op, terms)}; }; });
  auto* gw = gl->add_subcommand("waybelow", "x << y for x, y >= 0");
  gw->add_option("x", t1)->required();
  gw->add_option("y", t2)->required();
  gw->callback([&] { action = [&] { return std::vector<Report>{glambda_waybelow(t1, t2)}; }; });
  auto* gor = gl->add_subcommand("ortho", "orthogonal set check");
  gor->add_option("elements", terms)->required();
  gor->callback([&] { action = [&] { return std::vector<Report>{glambda_ortho(terms)}; }; });

  auto* rep = app.add_subcommand("replicate", "replay the finite computations of the counterexamples")
                  ->require_subcommand(1);
  auto add_rep = [&](const char* name, const char* help, std::function<std::vector<Report>()> f) {
    rep->add_subcommand(name, help)->callback([&, f] { action = f; });
  };
  add_rep("all", "every kernel", [] { return replicate_all(); });
  add_rep("cube", "cube of embeddings, faces and strong amalgams",
          [] { return std::vector<Report>{replicate_cube()}; });
  add_rep("v0", "V0 expansion of the cube", [] { return std::vector<Report>{replicate_cube_v0()}; });
  add_rep("rho", "forced values of rho and the failed triangle",
          [] { return std::vector<Report>{run_rho_contradiction()}; });
  add_rep("closed-kernel", "3 -> 2 is not closed", [] { return std::vector<Report>{kernel_not_closed()}; });
  add_rep("convex-kernel", "4 -> 3 is not convex; almost-constant surjection",
          [] { return std::vector<Report>{kernel_not_convex()}; });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (o.dot && !dot_ok) {
    err << "error: --dot applies to 'lattice check' only\n";
    return kInputError;
  }
  std::vector<Report> rs;
  try {
    rs = action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const LatticeError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (o.dot) {
    out << dot_text;
  } else {
    emit(out, rs, o);
  }
  bool ok = true;
  for (const auto& r : rs)
    if (!r.passed()) {
      ok = false;
      if (const Check* c = r.first_failure())
        err << "check failed: " << r.title << ": " << c->name << (c->detail.empty() ? "" : " -- " + c->detail) << '\n';
    }
  return ok ? kOk : kCheckFailed;
}

}  // namespace latspec::cli
