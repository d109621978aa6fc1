#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toppling/divisor.hpp"
#include "toppling/flags.hpp"
#include "toppling/module.hpp"
#include "toppling/polynomial.hpp"

namespace toppling {

struct Binomial {
  Monomial plus;
  Monomial minus;
  bool plus_leads = true;
};

std::vector<Binomial> groebner_basis(const FlagCalculus& fc);
std::vector<Monomial> initial_ideal(const FlagCalculus& fc);

template <class F>
std::vector<Polynomial<typename F::Scalar>> generator_polynomials(const FlagCalculus& fc, Variant variant,
                                                                  const F& field) {
  std::vector<Polynomial<typename F::Scalar>> out;
  for (const auto& b : groebner_basis(fc)) {
    Polynomial<typename F::Scalar> p(b.plus, field.from_int(1));
    if (variant == Variant::Binomial) p.add_term(b.minus, field.from_int(-1));
    out.push_back(std::move(p));
  }
  return out;
}

template <class S>
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Polynomial<S>>>> columns;  // (row, entry), rows ascending

  const Polynomial<S>* at(int r, int c) const {
    for (const auto& [row, p] : columns[c])
      if (row == r) return &p;
    return nullptr;
  }
};

template <class S>
struct FreeResolution {
  Variant variant = Variant::Binomial;
  // bases[i] = S_{i+1}(G, q) indexes F_{i-1}; bases[0] = {V(G)} stands for F_{-1} = R.
  std::vector<FlagBasis> bases;
  // diffs[k] = φ_k : F_k -> F_{k-1}; columns indexed by S_{k+2}, rows by S_{k+1}.
  std::vector<SparseMatrix<S>> diffs;
  std::vector<std::vector<Divisor>> multidegrees;  // D(U) per basis element
  std::vector<std::vector<int>> z_degrees;
  std::vector<std::vector<PicClass>> pic_degrees;
};

template <class F>
FreeResolution<typename F::Scalar> build_resolution(const FlagCalculus& fc, Variant variant, const F& field) {
  using S = typename F::Scalar;
  const PointedGraph& g = fc.graph();
  FreeResolution<S> res;
  res.variant = variant;
  for (int k = 1; k <= g.n(); ++k) {
    const FlagBasis& b = fc.basis(k);
    res.bases.push_back(b);
    std::vector<Divisor> md;
    std::vector<int> zd;
    std::vector<PicClass> pd;
    for (const auto& f : b.flags) {
      Divisor d = flag_divisor(g, f);
      zd.push_back(degree(d));
      pd.push_back(pic_class(g, g.q(), d));
      md.push_back(std::move(d));
    }
    res.multidegrees.push_back(std::move(md));
    res.z_degrees.push_back(std::move(zd));
    res.pic_degrees.push_back(std::move(pd));
  }
  for (int k = 2; k <= g.n(); ++k) {
    SparseMatrix<S> m;
    m.rows = fc.basis(k - 1).size();
    m.cols = fc.basis(k).size();
    for (const auto& u : fc.basis(k).flags) {
      std::map<int, Polynomial<S>> col;
      for (const auto& t : fc.boundary_terms(u, variant))
        col[t.target].add_term(Monomial::from_divisor(t.theta), field.from_int(t.sign));
      std::vector<std::pair<int, Polynomial<S>>> entries;
      for (auto& [r, p] : col)
        if (!p.is_zero()) entries.emplace_back(r, std::move(p));
      m.columns.push_back(std::move(entries));
    }
    res.diffs.push_back(std::move(m));
  }
  return res;
}

struct BettiTable {
  std::map<std::pair<int, int>, long> z;      // (i, j) -> β_{i,j}
  std::map<std::pair<int, Divisor>, long> pic;  // (i, reduced representative) -> β_{i,j}

  std::vector<long> totals() const;
  int regularity() const;  // max(j - i) over nonzero entries
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.z == b.z && a.pic == b.pic; }
  friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }
};

// Counts connected flags: β_{i,j} = |S_{i+1,j}(G, q)|.
BettiTable betti_table(const FlagCalculus& fc);

template <class S>
BettiTable betti_from_resolution(const FreeResolution<S>& res) {
  BettiTable t;
  for (std::size_t i = 0; i < res.bases.size(); ++i)
    for (std::size_t e = 0; e < res.z_degrees[i].size(); ++e) {
      t.z[{static_cast<int>(i), res.z_degrees[i][e]}] += 1;
      t.pic[{static_cast<int>(i), res.pic_degrees[i][e].rep}] += 1;
    }
  return t;
}

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample when !ok
};

struct Report {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

std::string format_flag(const ConnectedFlag& f);  // io.cpp

template <class S>
Report verify_resolution(const FlagCalculus& fc, const FreeResolution<S>& res) {
  const PointedGraph& g = fc.graph();
  const TermOrder order = bfs_term_order(g);
  Report rep;

  // (a) consecutive compositions vanish
  {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 1; k < res.diffs.size() && ok; ++k) {
      const auto& outer = res.diffs[k - 1];
      const auto& inner = res.diffs[k];
      for (int c = 0; c < inner.cols && ok; ++c) {
        std::map<int, Polynomial<S>> acc;
        for (const auto& [mid, p] : inner.columns[c])
          for (const auto& [row, q] : outer.columns[mid]) acc[row] += p * q;
        for (const auto& [row, p] : acc)
          if (!p.is_zero()) {
            ok = false;
            detail = "phi_" + std::to_string(k - 1) + " o phi_" + std::to_string(k) + " nonzero at column " +
                     format_flag(res.bases[k + 1].flags[c]);
            break;
          }
      }
    }
    rep.add("complex", ok, detail);
  }

  // (b) minimality: no unit entries
  {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k < res.diffs.size() && ok; ++k)
      for (int c = 0; c < res.diffs[k].cols && ok; ++c)
        for (const auto& [row, p] : res.diffs[k].columns[c])
          if (p.has_constant_term()) {
            ok = false;
            detail = "unit entry in phi_" + std::to_string(k) + " column " + format_flag(res.bases[k + 1].flags[c]);
            break;
          }
    rep.add("minimality", ok, detail);
  }

  // (c) leading terms under the pulled-back order
  {
    bool ok = true;
    std::string detail;
    std::vector<Monomial> shift{Monomial{}};
    std::vector<std::vector<int>> chain{{}};
    for (std::size_t k = 0; k < res.diffs.size() && ok; ++k) {
      const ModuleOrder mo(order, shift, chain);
      const FlagBasis& cols = res.bases[k + 1];
      std::vector<Monomial> next_shift;
      std::vector<std::vector<int>> next_chain;
      for (int c = 0; c < cols.size() && ok; ++c) {
        const ConnectedFlag& u = cols.flags[c];
        ModuleMonomial best{-1, {}};
        for (const auto& [row, p] : res.diffs[k].columns[c])
          for (const auto& [m, coef] : p.terms()) {
            ModuleMonomial t{row, m};
            if (best.basis < 0 || mo.compare(best, t) < 0) best = t;
          }
        const Monomial expect =
            Monomial::from_divisor(boundary_divisor(g, u.chain[1] & ~u.chain[0], u.chain[0]));
        const int expect_row = res.bases[k].find(flag_orientation(g, drop_first(g, u)));
        if (best.basis != expect_row || !(best.exp == expect)) {
          ok = false;
          detail = "leading term of column " + format_flag(u) + " in phi_" + std::to_string(k) +
                   " is not x^D(U2\\U1,U1)[U^(1)]";
          break;
        }
        next_shift.push_back(best.exp + shift[best.basis]);
        auto ch = chain[best.basis];
        ch.push_back(c);
        next_chain.push_back(std::move(ch));
      }
      shift = std::move(next_shift);
      chain = std::move(next_chain);
    }
    rep.add("leading-terms", ok, detail);
  }

  // (d) homogeneity in both gradings
  {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k < res.diffs.size() && ok; ++k)
      for (int c = 0; c < res.diffs[k].cols && ok; ++c)
        for (const auto& [row, p] : res.diffs[k].columns[c])
          for (const auto& [m, coef] : p.terms()) {
            const Divisor lifted = add(res.multidegrees[k][row], m.to_divisor(g.n()));
            const bool z_ok = degree(lifted) == res.z_degrees[k + 1][c];
            const bool pic_ok = pic_class(g, g.q(), lifted) == res.pic_degrees[k + 1][c];
            if (!z_ok || !pic_ok) {
              ok = false;
              detail = "entry of phi_" + std::to_string(k) + " column " + format_flag(res.bases[k + 1].flags[c]) +
                       (z_ok ? " breaks the Pic grading" : " breaks the Z grading");
              break;
            }
          }
    rep.add("degrees", ok, detail);
  }
  return rep;
}

// HF(d) = #effective q-reduced divisors of degree d.
std::vector<long> hilbert_function(const PointedGraph& g, int t_max);
Report hilbert_check(const FlagCalculus& fc, int t_max);

// Every S-polynomial of the generating set reduces to zero.
template <class S>
bool buchberger_check(const std::vector<Polynomial<S>>& gens, const TermOrder& order) {
  const ModuleOrder ring = ModuleOrder::for_ring(order);
  std::vector<ModuleElement<S>> basis;
  for (const auto& p : gens)
    if (!p.is_zero()) basis.push_back(ModuleElement<S>::from_polynomial(&ring, p));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Monomial& a = basis[i].lead().exp;
      const Monomial& b = basis[j].lead().exp;
      const Monomial l = lcm(a, b);
      ModuleElement<S> s(&ring);
      s.add_scaled(basis[i], l - a, inverse(basis[i].lead_coeff()));
      s.add_scaled(basis[j], l - b, -inverse(basis[j].lead_coeff()));
      if (!division_normal_form(s, basis).remainder.is_zero()) return false;
    }
  return true;
}

}  // namespace toppling
