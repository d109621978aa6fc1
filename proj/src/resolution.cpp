#include "toppling/resolution.hpp"

#include <algorithm>

namespace toppling {

std::vector<Binomial> groebner_basis(const FlagCalculus& fc) {
  const PointedGraph& g = fc.graph();
  const TermOrder order = bfs_term_order(g);
  std::vector<Binomial> out;
  if (g.n() < 2) return out;
  for (const auto& u : fc.basis(2).flags) {
    const VertexSet a1 = u.chain[0], a2 = u.chain[1] & ~u.chain[0];
    Binomial b;
    b.plus = Monomial::from_divisor(boundary_divisor(g, a2, a1));
    b.minus = Monomial::from_divisor(boundary_divisor(g, a1, a2));
    b.plus_leads = order.compare(b.plus, b.minus) > 0;
    if (!b.plus_leads)
      throw Error(ErrorKind::LeadingTermMismatch, "x^D(U2\\U1,U1) does not lead for " + format_flag(u));
    out.push_back(b);
  }
  return out;
}

std::vector<Monomial> initial_ideal(const FlagCalculus& fc) {
  std::vector<Monomial> out;
  for (const auto& b : groebner_basis(fc)) out.push_back(b.plus);
  return out;
}

std::vector<long> BettiTable::totals() const {
  std::vector<long> t;
  for (const auto& [key, count] : z) {
    if (static_cast<int>(t.size()) <= key.first) t.resize(key.first + 1, 0);
    t[key.first] += count;
  }
  return t;
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [key, count] : z)
    if (count != 0) r = std::max(r, key.second - key.first);
  return r;
}

BettiTable betti_table(const FlagCalculus& fc) {
  const PointedGraph& g = fc.graph();
  BettiTable t;
  for (int k = 1; k <= g.n(); ++k)
    for (const auto& f : fc.basis(k).flags) {
      const Divisor d = flag_divisor(g, f);
      t.z[{k - 1, degree(d)}] += 1;
      t.pic[{k - 1, q_reduce(g, g.q(), d)}] += 1;
    }
  return t;
}

std::vector<long> hilbert_function(const PointedGraph& g, int t_max) {
  std::vector<long> hf;
  for (int d = 0; d <= t_max; ++d) {
    long c = 0;
    for (const auto& e : effective_divisors(g.n(), d))
      if (is_q_reduced(g, g.q(), e)) ++c;
    hf.push_back(c);
  }
  return hf;
}

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool standard(const Monomial& m, const std::vector<Monomial>& ideal) {
  for (const auto& g : ideal)
    if (g.divides(m)) return false;
  return true;
}

}  // namespace

Report hilbert_check(const FlagCalculus& fc, int t_max) {
  const PointedGraph& g = fc.graph();
  const int n = g.n();
  Report rep;
  const std::vector<long> hf = hilbert_function(g, t_max);

  // standard monomials of the initial ideal, degree by degree
  {
    const auto ideal = initial_ideal(fc);
    bool ok = true;
    std::string detail;
    for (int d = 0; d <= t_max && ok; ++d) {
      long c = 0;
      for (const auto& e : effective_divisors(n, d))
        if (standard(Monomial::from_divisor(e), ideal)) ++c;
      if (c != hf[d]) {
        ok = false;
        detail = "degree " + std::to_string(d) + ": " + std::to_string(c) + " standard monomials vs " +
                 std::to_string(hf[d]) + " reduced divisors";
      }
    }
    rep.add("standard-monomials", ok, detail);
  }

  // Σ_i (-1)^i Σ_j β_{i,j} t^j = (1 - t)^n Σ_d HF(d) t^d, coefficientwise up to t_max
  {
    const BettiTable t = betti_table(fc);
    std::vector<long> lhs(t_max + 1, 0), rhs(t_max + 1, 0);
    for (const auto& [key, count] : t.z)
      if (key.second <= t_max) lhs[key.second] += (key.first % 2 ? -1 : 1) * count;
    for (int d = 0; d <= t_max; ++d)
      for (int s = 0; s <= std::min(d, n); ++s) rhs[d] += (s % 2 ? -1 : 1) * binom(n, s) * hf[d - s];
    bool ok = true;
    std::string detail;
    for (int d = 0; d <= t_max; ++d)
      if (lhs[d] != rhs[d]) {
        ok = false;
        detail = "coefficient of t^" + std::to_string(d) + ": " + std::to_string(lhs[d]) + " vs " +
                 std::to_string(rhs[d]);
        break;
      }
    rep.add("hilbert-identity", ok, detail);
  }
  return rep;
}

}  // namespace toppling
