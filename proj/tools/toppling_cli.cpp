// Command-line front end: toppling <verb> --graph FILE [options]
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toppling/io.hpp"
#include "toppling/oracle.hpp"

using namespace toppling;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerification = 2;

struct Options {
  std::string graph_path;
  int q = 0;  // 1-based; 0 keeps the file's value
  std::string grading = "Z";
  std::string variant = "binomial";
  std::string field = "prime:32003";
  std::string output;
  std::string format;
  std::string oracle = "all";
  std::string flag;
  std::string divisor;
  std::string other;
  int k = 0;
};

// Thrown for failed internal checks; maps to exit code 2.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PointedGraph load(const Options& o) {
  PointedGraph g = load_graph(o.graph_path);
  if (o.q != 0) {
    if (o.q < 1 || o.q > g.n()) throw Error(ErrorKind::BadVertex, "--q out of range");
    g = g.with_q(o.q - 1);
  }
  return g;
}

Variant parse_variant(const std::string& s) {
  if (s == "binomial") return Variant::Binomial;
  if (s == "monomial") return Variant::Monomial;
  throw Error(ErrorKind::Parse, "variant must be binomial or monomial");
}

Grading parse_grading(const std::string& s) {
  if (s == "Z" || s == "z") return Grading::Z;
  if (s == "Pic" || s == "pic") return Grading::Pic;
  throw Error(ErrorKind::Parse, "grading must be Z or Pic");
}

// "rational", "prime", "prime:p" or "prime(p)"; returns 0 for the rationals.
std::uint32_t parse_field(const std::string& s) {
  if (s == "rational") return 0;
  if (s == "prime") return 32003;
  std::string digits;
  if (s.rfind("prime:", 0) == 0) digits = s.substr(6);
  else if (s.rfind("prime(", 0) == 0 && s.back() == ')') digits = s.substr(6, s.size() - 7);
  else throw Error(ErrorKind::Parse, "field must be rational or prime:p");
  const long p = std::stol(digits);
  if (p < 2 || p > 65521) throw Error(ErrorKind::Parse, "prime out of range");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(ErrorKind::Parse, digits + " is not prime");
  return static_cast<std::uint32_t>(p);
}

template <class Fn>
auto with_field(const std::string& name, Fn&& fn) {
  const std::uint32_t p = parse_field(name);
  if (p == 0) return fn(RationalField{});
  return fn(PrimeField{p});
}

std::string report_text(const Report& r) {
  std::string out;
  for (const auto& c : r.checks) {
    out += c.name + "\t" + (c.ok ? "ok" : "FAIL");
    if (!c.ok && !c.detail.empty()) out += "\t" + c.detail;
    out += "\n";
  }
  return out;
}

std::string run_betti(const Options& o) {
  const PointedGraph g = load(o);
  FlagCalculus fc(g);
  const Grading grading = parse_grading(o.grading);
  const BettiTable t = with_field(o.field, [&](auto field) {
    return betti_from_resolution(build_resolution(fc, parse_variant(o.variant), field));
  });
  return o.format == "json" ? betti_json(t, grading) : betti_tsv(t, grading);
}

std::string run_resolution(const Options& o) {
  const PointedGraph g = load(o);
  FlagCalculus fc(g);
  return with_field(o.field, [&](auto field) {
    const auto res = build_resolution(fc, parse_variant(o.variant), field);
    const Report rep = verify_resolution(fc, res);
    if (!rep.ok()) throw VerificationFailure(report_text(rep));
    if (o.format != "json") return resolution_text(res, g.n());
    nlohmann::json j;
    j["bases"] = nlohmann::json::array();
    for (const auto& b : res.bases) {
      nlohmann::json level = nlohmann::json::array();
      for (const auto& f : b.flags) level.push_back(format_flag(f));
      j["bases"].push_back(level);
    }
    j["diffs"] = nlohmann::json::array();
    for (const auto& m : res.diffs) {
      nlohmann::json entries = nlohmann::json::array();
      for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, p] : m.columns[c]) entries.push_back({r, c, polynomial_to_string(p, g.n())});
      j["diffs"].push_back({{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}});
    }
    return j.dump(2) + "\n";
  });
}

std::string run_groebner(const Options& o) {
  const PointedGraph g = load(o);
  FlagCalculus fc(g);
  const TermOrder order = bfs_term_order(g);
  std::string out;
  for (const auto& p : generator_polynomials(fc, parse_variant(o.variant), RationalField{}))
    out += polynomial_to_string(p, g.n(), &order) + "\n";
  return out;
}

std::string run_flags(const Options& o) {
  const PointedGraph g = load(o);
  FlagCalculus fc(g);
  std::string out;
  const int lo = o.k ? o.k : 1, hi = o.k ? o.k : g.n();
  if (lo < 1 || hi > g.n()) throw Error(ErrorKind::BadK, "k must lie in 1..n");
  for (int k = lo; k <= hi; ++k)
    for (const auto& f : fc.basis(k).flags)
      out += std::to_string(k) + "\t" + std::to_string(degree(flag_divisor(g, f))) + "\t" + format_flag(f) + "\n";
  return out;
}

std::string run_reduce(const Options& o) {
  const PointedGraph g = load(o);
  return format_divisor(q_reduce(g, g.q(), parse_divisor(o.divisor, g.n()))) + "\n";
}

std::string run_equiv(const Options& o) {
  const PointedGraph g = load(o);
  const bool eq = linearly_equivalent(g, parse_divisor(o.divisor, g.n()), parse_divisor(o.other, g.n()));
  return eq ? "equivalent\n" : "not equivalent\n";
}

std::string run_linsys(const Options& o) {
  const PointedGraph g = load(o);
  std::string out;
  for (const auto& d : linear_system(g, g.q(), parse_divisor(o.divisor, g.n()))) out += format_divisor(d) + "\n";
  return out;
}

std::string run_orientations(const Options& o) {
  const PointedGraph g = load(o);
  const auto orients = acyclic_orientations_unique_source(g, g.q());
  std::string out;
  int idx = 0;
  for (const auto& orient : orients) {
    if (o.format == "dot") {
      out += orientation_dot(g, orient, "O" + std::to_string(++idx));
      continue;
    }
    Divisor e = indegree_divisor(g, orient);
    for (auto& x : e) --x;
    std::string arcs;
    const auto& pairs = g.adjacent_pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [u, v] = pairs[i];
      if (orient.state[i] == EdgeState::Backward) std::swap(u, v);
      arcs += (arcs.empty() ? "" : " ") + std::to_string(u + 1) + "->" + std::to_string(v + 1);
    }
    out += format_divisor(e) + "\t" + arcs + "\n";
  }
  return out;
}

template <class F>
Report verify_all(const PointedGraph& g, const std::string& which, const F& field) {
  FlagCalculus fc(g);
  Report rep;
  const bool all = which == "all";
  auto want = [&](const char* name) { return all || which == name; };
  const BettiTable table = betti_table(fc);
  if (want("complex")) {
    for (auto variant : {Variant::Binomial, Variant::Monomial}) {
      const auto res = build_resolution(fc, variant, field);
      const std::string tag = variant == Variant::Binomial ? "" : " (monomial)";
      for (const auto& c : verify_resolution(fc, res).checks) rep.add(c.name + tag, c.ok, c.detail);
      rep.add("ranks" + tag, betti_from_resolution(res) == table);
    }
    const auto gens = generator_polynomials(fc, Variant::Binomial, field);
    rep.add("buchberger", buchberger_check(gens, bfs_term_order(g)));
  }
  if (want("hilbert"))
    for (const auto& c : hilbert_check(fc, g.edge_count() + 2).checks) rep.add(c.name, c.ok, c.detail);
  if (want("schreyer")) {
    for (auto variant : {Variant::Binomial, Variant::Monomial}) {
      SchreyerOptions opt;
      const auto sr = schreyer_resolution(generator_polynomials(fc, variant, field), g, opt);
      const BettiTable t = minimalize(sr.complex(g.n()), g);
      rep.add(std::string("schreyer-oracle") + (variant == Variant::Binomial ? "" : " (monomial)"), t == table,
              t == table ? "" : "minimalized Schreyer table differs from the flag count");
    }
  }
  if (want("hochster")) {
    bool ok = true;
    std::string detail;
    for (int d = 0; d <= g.edge_count() && ok; ++d)
      for (const auto& e : effective_divisors(g.n(), d)) {
        if (!is_q_reduced(g, g.q(), e)) continue;
        for (int i = 0; i < g.n() && ok; ++i) {
          auto it = table.pic.find({i, e});
          const long want_count = it == table.pic.end() ? 0 : it->second;
          if (hochster_betti(g, i, e, field) != want_count) {
            ok = false;
            detail = "class " + format_divisor(e) + ", i = " + std::to_string(i);
          }
        }
        if (!ok) break;
      }
    rep.add("hochster", ok, detail);
  }
  if (want("flags")) {
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= g.n() && ok; ++k)
      if (brute_force_class_count(g, k) != fc.basis(k).size()) {
        ok = false;
        detail = "k = " + std::to_string(k);
      }
    rep.add("class-counts", ok, detail);
    const long top = fc.basis(g.n()).size();
    rep.add("top-betti", top == static_cast<long>(acyclic_orientations_unique_source(g, g.q()).size()));
    rep.add("regularity", table.regularity() == g.genus());
  }
  if (rep.checks.empty()) throw Error(ErrorKind::Parse, "unknown oracle '" + which + "'");
  return rep;
}

std::string run_verify(const Options& o, bool& failed) {
  const PointedGraph g = load(o);
  const Report rep = with_field(o.field, [&](auto field) { return verify_all(g, o.oracle, field); });
  failed = !rep.ok();
  return report_text(rep);
}

std::string run_export_dot(const Options& o) {
  const PointedGraph g = load(o);
  if (o.flag.empty()) throw Error(ErrorKind::Parse, "--flag is required");
  return orientation_dot(g, flag_orientation(g, parse_flag_literal(g, o.flag)));
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal free resolutions of toppling ideals via connected flags"};
  app.require_subcommand(1, 1);
  Options o;

  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph_path, "graph file (text or JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--q", o.q, "distinguished vertex (1-based), overrides the file");
    sub->add_option("--output,-o", o.output, "write to this file instead of stdout");
  };

  auto* betti = app.add_subcommand("betti", "graded Betti table");
  graph_opts(betti);
  betti->add_option("--grading", o.grading, "Z or Pic");
  betti->add_option("--variant", o.variant, "binomial or monomial");
  betti->add_option("--field", o.field, "rational or prime:p");
  betti->add_option("--format", o.format, "tsv or json");

  auto* resolution = app.add_subcommand("resolution", "differential matrices");
  graph_opts(resolution);
  resolution->add_option("--variant", o.variant, "binomial or monomial");
  resolution->add_option("--field", o.field, "rational or prime:p");
  resolution->add_option("--format", o.format, "text or json");

  auto* groebner = app.add_subcommand("groebner", "Groebner basis of the toppling ideal");
  graph_opts(groebner);
  groebner->add_option("--variant", o.variant, "binomial, or monomial for the initial ideal");

  auto* flags = app.add_subcommand("flags", "minimal connected flag representatives");
  graph_opts(flags);
  flags->add_option("--k", o.k, "only flags of this length");

  auto* reduce = app.add_subcommand("reduce", "q-reduced representative of a divisor");
  graph_opts(reduce);
  reduce->add_option("--divisor", o.divisor, "space-separated integers")->required();

  auto* equiv = app.add_subcommand("equiv", "linear equivalence test");
  graph_opts(equiv);
  equiv->add_option("--divisor", o.divisor)->required();
  equiv->add_option("--other", o.other)->required();

  auto* linsys = app.add_subcommand("linsys", "complete linear system |D|");
  graph_opts(linsys);
  linsys->add_option("--divisor", o.divisor)->required();

  auto* orientations = app.add_subcommand("orientations", "acyclic orientations with unique source q");
  graph_opts(orientations);
  orientations->add_option("--format", o.format, "text or dot");

  auto* verify = app.add_subcommand("verify", "run the self-checks and oracles");
  graph_opts(verify);
  verify->add_option("--oracle", o.oracle, "complex|hilbert|schreyer|hochster|flags|all");
  verify->add_option("--field", o.field, "rational or prime:p");

  auto* dot = app.add_subcommand("export-dot", "partial orientation of a flag as DOT");
  graph_opts(dot);
  dot->add_option("--flag", o.flag, "flag literal, e.g. \"{1}<{1,2}<{1,2,3,4}\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    std::string out;
    bool failed = false;
    if (*betti) out = run_betti(o);
    else if (*resolution) out = run_resolution(o);
    else if (*groebner) out = run_groebner(o);
    else if (*flags) out = run_flags(o);
    else if (*reduce) out = run_reduce(o);
    else if (*equiv) out = run_equiv(o);
    else if (*linsys) out = run_linsys(o);
    else if (*orientations) out = run_orientations(o);
    else if (*verify) out = run_verify(o, failed);
    else if (*dot) out = run_export_dot(o);
    emit(out, o.output);
    return failed ? kExitVerification : kExitOk;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed:\n" << e.what();
    return kExitVerification;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::LeadingTermMismatch:
      case ErrorKind::CompositionNonzero:
      case ErrorKind::UnitEntry:
      case ErrorKind::IdentityViolation:
      case ErrorKind::NotGroebner:
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
      default:
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
