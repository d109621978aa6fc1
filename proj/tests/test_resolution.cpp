#include <doctest.h>

#include <set>

#include "test_support.hpp"
#include "toppling/io.hpp"
#include "toppling/resolution.hpp"

using namespace toppling;

namespace {

std::vector<std::string> generators(const PointedGraph& g, Variant v = Variant::Binomial) {
  FlagCalculus fc(g);
  const TermOrder o = bfs_term_order(g);
  std::vector<std::string> out;
  for (const auto& p : generator_polynomials(fc, v, RationalField{})) out.push_back(polynomial_to_string(p, g.n(), &o));
  return out;
}

ConnectedFlag flag(const PointedGraph& g, const std::string& s) { return parse_flag_literal(g, s); }

}  // namespace

TEST_CASE("Groebner bases") {
  const auto c4 = generators(support::c4());
  CHECK(std::set<std::string>(c4.begin(), c4.end()) ==
        std::set<std::string>{"x3*x4 - x1*x2", "x2*x4 - x1*x3", "x2*x3 - x1^2", "x4^2 - x2*x3", "x3^2 - x1*x4",
                              "x2^2 - x1*x4"});
  CHECK(generators(support::theta(3)) == std::vector<std::string>{"x2^3 - x1^3"});
  const auto p3 = generators(support::path(3));
  CHECK(std::set<std::string>(p3.begin(), p3.end()) == std::set<std::string>{"x2 - x1", "x3 - x2"});

  // both sides of every generator are linearly equivalent
  for (const auto& g : support::random_corpus(10, 77)) {
    FlagCalculus fc(g);
    for (const auto& b : groebner_basis(fc)) {
      CHECK(b.plus_leads);
      CHECK_FALSE(b.plus == b.minus);
      CHECK(linearly_equivalent(g, b.plus.to_divisor(g.n()), b.minus.to_divisor(g.n())));
    }
  }
}

TEST_CASE("initial ideals") {
  const auto c4 = generators(support::c4(), Variant::Monomial);
  CHECK(std::set<std::string>(c4.begin(), c4.end()) ==
        std::set<std::string>{"x3*x4", "x2*x4", "x2*x3", "x4^2", "x3^2", "x2^2"});
  const auto p3 = generators(support::path(3), Variant::Monomial);
  CHECK(std::set<std::string>(p3.begin(), p3.end()) == std::set<std::string>{"x2", "x3"});
  const auto k3 = generators(support::complete(3), Variant::Monomial);
  CHECK(std::set<std::string>(k3.begin(), k3.end()) == std::set<std::string>{"x2*x3", "x3^2", "x2^2"});

  // minimal generating sets
  for (const auto& g : support::random_corpus(10, 78)) {
    const auto in = initial_ideal(FlagCalculus(g));
    for (std::size_t i = 0; i < in.size(); ++i)
      for (std::size_t j = 0; j < in.size(); ++j)
        if (i != j) CHECK_FALSE(in[i].divides(in[j]));
  }
}

TEST_CASE("Buchberger criterion") {
  const PointedGraph g = support::c4();
  FlagCalculus fc(g);
  const TermOrder o = bfs_term_order(g);
  auto gens = generator_polynomials(fc, Variant::Binomial, RationalField{});
  CHECK(buchberger_check(gens, o));
  CHECK(buchberger_check(generator_polynomials(fc, Variant::Binomial, PrimeField{}), o));
  bool some_fail = false;
  for (std::size_t drop = 0; drop < gens.size(); ++drop) {
    auto fewer = gens;
    fewer.erase(fewer.begin() + drop);
    some_fail |= !buchberger_check(fewer, o);
  }
  CHECK(some_fail);
  CHECK(buchberger_check(std::vector<Polynomial<Rational>>{gens[0]}, o));
}

TEST_CASE("C4 resolution") {
  const PointedGraph g = support::c4();
  FlagCalculus fc(g);
  const auto res = build_resolution(fc, Variant::Binomial, RationalField{});
  REQUIRE(res.bases.size() == 4);
  CHECK(res.bases[1].size() == 6);
  CHECK(res.bases[2].size() == 8);
  CHECK(res.bases[3].size() == 3);
  for (int i = 1; i <= 3; ++i)
    for (int d : res.z_degrees[i]) CHECK(d == i + 1);

  // first column of the last map, against the merges of U = {1}<{1,2}<{1,2,3}<V
  const ConnectedFlag u = flag(g, "{1}<{1,2}<{1,2,3}<{1,2,3,4}");
  const int col = fc.index_of(u);
  const std::vector<std::pair<std::string, std::string>> expected{
      {"{1,2}<{1,2,3}<{1,2,3,4}", "x2"},  {"{1,3}<{1,2,3}<{1,2,3,4}", "-x3"},
      {"{1}<{1,2}<{1,2,3,4}", "x4"},      {"{1}<{1,3}<{1,2,3,4}", "-x4"},
      {"{1,2}<{1,2,4}<{1,2,3,4}", "x1"},  {"{1,3}<{1,3,4}<{1,2,3,4}", "-x1"},
      {"{1}<{1,2,4}<{1,2,3,4}", "-x2"},   {"{1}<{1,3,4}<{1,2,3,4}", "x3"}};
  CHECK(res.diffs[2].columns[col].size() == expected.size());
  for (const auto& [lit, poly] : expected) {
    const Polynomial<Rational>* p = res.diffs[2].at(fc.index_of(flag(g, lit)), col);
    REQUIRE(p != nullptr);
    CHECK(polynomial_to_string(*p, 4) == poly);
  }
  CHECK(verify_resolution(fc, res).ok());
}

TEST_CASE("merging two parts fed by the same earlier part") {
  // Parts {4} and {6} of {1,2,3} < {1,2,3,5} < {1,2,3,4,5} < V both receive
  // edges from {1,2,3}; the fused part must count them once.
  const PointedGraph g = support::graph1(
      6, {{1, 3}, {1, 6}, {2, 3}, {2, 5}, {3, 4, 2}, {3, 6}, {4, 5, 2}, {4, 6}});
  for (int q = 0; q < g.n(); ++q) {
    FlagCalculus fc(g.with_q(q));
    for (auto v : {Variant::Binomial, Variant::Monomial}) {
      const auto res = build_resolution(fc, v, RationalField{});
      const Report rep = verify_resolution(fc, res);
      for (const auto& c : rep.checks) CHECK_MESSAGE(c.ok, c.name << ": " << c.detail);
    }
  }
  FlagCalculus fc(g);
  const ConnectedFlag u = flag(g, "{1,2,3} < {1,2,3,5} < {1,2,3,4,5} < {1,2,3,4,5,6}");
  for (const auto& t : fc.boundary_terms(u, Variant::Binomial)) {
    const Divisor lifted = add(flag_divisor(g, fc.basis(3).flags[t.target]), t.theta);
    CHECK(linearly_equivalent(g, lifted, flag_divisor(g, u)));
  }
}

TEST_CASE("path resolution is Koszul") {
  const PointedGraph g = support::path(3);
  FlagCalculus fc(g);
  for (auto v : {Variant::Binomial, Variant::Monomial}) {
    const auto res = build_resolution(fc, v, PrimeField{});
    CHECK(betti_from_resolution(res).totals() == std::vector<long>{1, 2, 1});
    CHECK(verify_resolution(fc, res).ok());
  }
}

TEST_CASE("Betti tables") {
  CHECK(betti_table(FlagCalculus(support::cycle(5))).totals() == std::vector<long>{1, 10, 20, 15, 4});
  CHECK(betti_table(FlagCalculus(support::complete(4))).totals() == std::vector<long>{1, 7, 12, 6});
  const BettiTable c4 = betti_table(FlagCalculus(support::c4()));
  CHECK(c4.z == std::map<std::pair<int, int>, long>{{{0, 0}, 1}, {{1, 2}, 6}, {{2, 3}, 8}, {{3, 4}, 3}});
  CHECK(c4.regularity() == 1);
  for (const auto& g : support::random_corpus(8, 12)) {
    FlagCalculus fc(g);
    const BettiTable t = betti_table(fc);
    for (auto v : {Variant::Binomial, Variant::Monomial}) {
      CHECK(betti_from_resolution(build_resolution(fc, v, PrimeField{})) == t);
    }
    const auto totals = t.totals();
    for (int i = 0; i < g.n(); ++i) CHECK(totals[i] == fc.basis(i + 1).size());
  }
}

TEST_CASE("verification reports perturbations") {
  const PointedGraph g = support::c4();
  FlagCalculus fc(g);
  auto res = build_resolution(fc, Variant::Binomial, RationalField{});
  auto& entry = res.diffs[2].columns[0][0].second;
  entry = entry.scaled(Monomial{}, Rational(-1));
  const Report r = verify_resolution(fc, res);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.checks[0].ok);
  CHECK(r.checks[0].name == "complex");
  CHECK(r.checks[1].ok);

  auto res2 = build_resolution(fc, Variant::Binomial, RationalField{});
  res2.diffs[1].columns[0].front().second.add_term(Monomial{}, Rational(1));
  const Report r2 = verify_resolution(fc, res2);
  CHECK_FALSE(r2.checks[1].ok);
  CHECK_FALSE(r2.checks[3].ok);
}

TEST_CASE("Hilbert function and identity") {
  CHECK(hilbert_function(support::c4(), 5) == std::vector<long>{1, 4, 4, 4, 4, 4});
  CHECK(hilbert_function(support::path(3), 4) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(hilbert_function(support::theta(3), 6) == std::vector<long>{1, 2, 3, 3, 3, 3, 3});
  for (const PointedGraph& g : {support::c4(), support::path(3), support::theta(3), support::complete(4)})
    CHECK(hilbert_check(FlagCalculus(g), g.edge_count() + 2).ok());
  const BettiTable th = betti_table(FlagCalculus(support::theta(3)));
  CHECK(th.z == std::map<std::pair<int, int>, long>{{{0, 0}, 1}, {{1, 3}, 1}});
}
