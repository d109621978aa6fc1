#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "toppling/divisor.hpp"
#include "toppling/flags.hpp"
#include "toppling/module.hpp"
#include "toppling/resolution.hpp"

namespace toppling {

// ---------------------------------------------------------------------------
// Exact rank

template <class S>
int matrix_rank(std::vector<std::vector<S>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!is_zero(m[r][c])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    const S inv = inverse(m[rank][c]);
    for (int r = rank + 1; r < rows; ++r) {
      if (is_zero(m[r][c])) continue;
      const S f = m[r][c] * inv;
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Fraction-free (Bareiss) elimination once denominators are cleared row by row.
template <>
inline int matrix_rank<Rational>(std::vector<std::vector<Rational>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int r = 0; r < rows; ++r) {
    mpz_class den = 1;
    for (auto& x : m[r]) {
      x.canonicalize();
      den = lcm(den, mpz_class(x.get_den()));
    }
    for (int c = 0; c < cols; ++c) a[r][c] = mpz_class(m[r][c].get_num()) * (den / m[r][c].get_den());
  }
  int rank = 0;
  mpz_class prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int cc = c + 1; cc < cols; ++cc) a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Graded complexes and minimalization

// Free complex of the quotient R/I: level 0 is R, maps[i] : level i+1 -> level i.
// Every basis element carries a divisor whose degree and class are its grading.
template <class S>
struct GradedComplex {
  std::vector<std::vector<Divisor>> degrees;
  std::vector<SparseMatrix<S>> maps;

  std::vector<int> ranks() const {
    std::vector<int> r;
    for (const auto& d : degrees) r.push_back(static_cast<int>(d.size()));
    return r;
  }
};

template <class S>
GradedComplex<S> as_graded_complex(const FreeResolution<S>& res) {
  return GradedComplex<S>{res.multidegrees, res.diffs};
}

// A zero carrying the modulus of the matrix entries (matters only for Fp).
template <class S>
S block_zero(const SparseMatrix<S>& m) {
  for (const auto& col : m.columns)
    for (const auto& [r, p] : col)
      for (const auto& [mono, c] : p.terms()) return c - c;
  return S{};
}

// Graded Betti numbers of the complex, i.e. the homology of F ⊗ K.  The
// degree-zero (scalar) parts of the maps only join basis elements of the same
// Pic class, so the computation splits class by class:
//   β_{i,c} = #basis(i, c) − rank(scalar block of maps[i−1] at c) − rank(scalar block of maps[i] at c).
template <class S>
BettiTable minimalize(const GradedComplex<S>& cx, const PointedGraph& g) {
  const int levels = static_cast<int>(cx.degrees.size());
  std::vector<std::vector<Divisor>> cls(levels);
  std::vector<std::map<Divisor, std::vector<int>>> by_class(levels);
  for (int i = 0; i < levels; ++i)
    for (std::size_t e = 0; e < cx.degrees[i].size(); ++e) {
      cls[i].push_back(q_reduce(g, g.q(), cx.degrees[i][e]));
      by_class[i][cls[i].back()].push_back(static_cast<int>(e));
    }
  // rank of the scalar block of maps[i] (level i+1 -> level i), per class
  std::vector<std::map<Divisor, int>> block_rank(cx.maps.size());
  for (std::size_t i = 0; i < cx.maps.size() && i + 1 < cx.degrees.size(); ++i) {
    const auto& m = cx.maps[i];
    for (const auto& [c, cols] : by_class[i + 1]) {
      auto rit = by_class[i].find(c);
      if (rit == by_class[i].end()) continue;
      std::map<int, int> row_pos;
      for (std::size_t r = 0; r < rit->second.size(); ++r) row_pos[rit->second[r]] = static_cast<int>(r);
      std::vector<std::vector<S>> block(rit->second.size(), std::vector<S>(cols.size()));
      bool any = false;
      for (std::size_t cc = 0; cc < cols.size(); ++cc)
        for (const auto& [r, p] : m.columns[cols[cc]]) {
          auto it = p.terms().find(Monomial{});
          if (it == p.terms().end()) continue;
          auto pos = row_pos.find(r);
          if (pos == row_pos.end()) continue;
          block[pos->second][cc] = it->second;
          any = true;
        }
      if (!any) continue;
      // Fill empty cells with the field's zero of the right characteristic.
      const S zero = block_zero(m);
      for (auto& row : block)
        for (auto& x : row)
          if (is_zero(x)) x = zero;
      block_rank[i][c] = matrix_rank(block);
    }
  }
  BettiTable t;
  for (int i = 0; i < levels; ++i)
    for (const auto& [c, elems] : by_class[i]) {
      long b = static_cast<long>(elems.size());
      if (i >= 1 && i - 1 < static_cast<int>(block_rank.size())) {
        auto it = block_rank[i - 1].find(c);
        if (it != block_rank[i - 1].end()) b -= it->second;
      }
      if (i < static_cast<int>(block_rank.size())) {
        auto it = block_rank[i].find(c);
        if (it != block_rank[i].end()) b -= it->second;
      }
      if (b != 0) {
        t.pic[{i, c}] += b;
        t.z[{i, degree(c)}] += b;
      }
    }
  return t;
}

// ---------------------------------------------------------------------------
// Schreyer resolution

enum class SchreyerPolicy {
  Generic,     // by leading basis index, then lex on exponents from the highest-ranked variable down
  Given,       // keep the order in which elements arrive
  Reverse,     // reverse it
  FlagChains,  // sort by flag_less on chain labels (generators labelled by S_2)
};

template <class S>
struct SchreyerLevel {
  const ModuleOrder* order = nullptr;    // order on the free module the elements live in
  std::vector<ModuleElement<S>> elements;  // sorted Gröbner basis
  std::vector<Divisor> tot;              // pushed-down leading exponent = grading of the element
  std::vector<std::vector<VertexSet>> labels;  // FlagChains only
};

template <class S>
struct SchreyerResolution {
  SchreyerResolution() = default;
  SchreyerResolution(const SchreyerResolution&) = delete;  // levels point into orders
  SchreyerResolution& operator=(const SchreyerResolution&) = delete;
  SchreyerResolution(SchreyerResolution&&) = default;
  SchreyerResolution& operator=(SchreyerResolution&&) = default;

  std::deque<ModuleOrder> orders;  // stable addresses
  std::vector<SchreyerLevel<S>> levels;  // levels[0] = generators in R

  GradedComplex<S> complex(int n) const {
    GradedComplex<S> cx;
    cx.degrees.push_back({Divisor(n, 0)});
    for (const auto& lvl : levels) cx.degrees.push_back(lvl.tot);
    for (std::size_t L = 0; L < levels.size(); ++L) {
      SparseMatrix<S> m;
      m.rows = L == 0 ? 1 : static_cast<int>(levels[L - 1].elements.size());
      m.cols = static_cast<int>(levels[L].elements.size());
      for (const auto& e : levels[L].elements) {
        std::map<int, Polynomial<S>> col;
        for (const auto& [mm, c] : e.terms()) col[mm.basis].add_term(mm.exp, c);
        std::vector<std::pair<int, Polynomial<S>>> entries(col.begin(), col.end());
        m.columns.push_back(std::move(entries));
      }
      cx.maps.push_back(std::move(m));
    }
    return cx;
  }

  std::vector<int> ranks() const {
    std::vector<int> r{1};
    for (const auto& l : levels) r.push_back(static_cast<int>(l.elements.size()));
    return r;
  }
};

struct SchreyerOptions {
  SchreyerPolicy policy = SchreyerPolicy::Generic;
  bool full_pairs = false;  // skip the chain criterion
  int max_len = 64;
};

namespace detail {

inline bool lex_greater(const Monomial& a, const Monomial& b, const TermOrder& order) {
  for (auto it = order.priority.rbegin(); it != order.priority.rend(); ++it)
    if (a.e[*it] != b.e[*it]) return a.e[*it] > b.e[*it];
  return false;
}

template <class S>
void sort_level(SchreyerLevel<S>& lvl, SchreyerPolicy policy, const TermOrder& order) {
  std::vector<int> perm(lvl.elements.size());
  std::iota(perm.begin(), perm.end(), 0);
  switch (policy) {
    case SchreyerPolicy::Given:
      return;
    case SchreyerPolicy::Reverse:
      std::reverse(perm.begin(), perm.end());
      break;
    case SchreyerPolicy::Generic:
      std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        const auto& la = lvl.elements[a].lead();
        const auto& lb = lvl.elements[b].lead();
        if (la.basis != lb.basis) return la.basis < lb.basis;
        return lex_greater(la.exp, lb.exp, order);
      });
      break;
    case SchreyerPolicy::FlagChains:
      std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return flag_less(ConnectedFlag{lvl.labels[a]}, ConnectedFlag{lvl.labels[b]});
      });
      break;
  }
  SchreyerLevel<S> out;
  out.order = lvl.order;
  for (int i : perm) {
    out.elements.push_back(lvl.elements[i]);
    out.tot.push_back(lvl.tot[i]);
    if (!lvl.labels.empty()) out.labels.push_back(lvl.labels[i]);
  }
  lvl = std::move(out);
}

}  // namespace detail

// One Schreyer step: the syzygies s(f, h) of a sorted Gröbner basis, as a
// Gröbner basis of the syzygy module under the pulled-back order `next`.
// Unless full_pairs is set, for each f only the pairs whose leading
// monomials x^{γ(f,h)−α(f)} are divisibility-minimal are kept (on ties, the
// earliest h).
template <class S>
SchreyerLevel<S> schreyer_step(const SchreyerLevel<S>& cur, const ModuleOrder* next, const PointedGraph& g,
                               bool full_pairs) {
  const int r = static_cast<int>(cur.elements.size());
  SchreyerLevel<S> out;
  out.order = next;
  for (int i = 0; i < r; ++i) {
    const auto& f = cur.elements[i];
    std::vector<std::pair<Monomial, int>> cands;
    for (int j = i + 1; j < r; ++j) {
      const auto& h = cur.elements[j];
      if (h.lead().basis != f.lead().basis) continue;
      cands.emplace_back(lcm(f.lead().exp, h.lead().exp) - f.lead().exp, j);
    }
    std::vector<std::pair<Monomial, int>> keep;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool redundant = false;
      if (!full_pairs)
        for (std::size_t b = 0; b < cands.size() && !redundant; ++b) {
          if (a == b || !cands[b].first.divides(cands[a].first)) continue;
          redundant = !(cands[b].first == cands[a].first) || b < a;
        }
      if (!redundant) keep.push_back(cands[a]);
    }
    for (const auto& [mf, j] : keep) {
      const auto& h = cur.elements[j];
      const Monomial gam = mf + f.lead().exp;
      const Monomial mh = gam - h.lead().exp;
      const S cf = inverse(f.lead_coeff());
      const S ch = inverse(h.lead_coeff());
      ModuleElement<S> spoly(cur.order);
      spoly.add_scaled(f, mf, cf);
      spoly.add_scaled(h, mh, -ch);
      const auto dr = division_normal_form(spoly, cur.elements);
      if (!dr.remainder.is_zero())
        throw Error(ErrorKind::NotGroebner, "S-pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                                ") has a nonzero normal form");
      ModuleElement<S> syz(next);
      syz.add_term({i, mf}, cf);
      syz.add_term({j, mh}, -ch);
      for (int q = 0; q < r; ++q)
        for (const auto& [m, c] : dr.quotients[q].terms()) syz.add_term({q, m}, -c);
      if (!(syz.lead() == ModuleMonomial{i, mf}))
        throw Error(ErrorKind::LeadingTermMismatch, "syzygy leading term is not x^(γ−α(f))[f]");
      out.elements.push_back(std::move(syz));
      out.tot.push_back(add(mf.to_divisor(g.n()), cur.tot[i]));
      if (!cur.labels.empty()) {
        std::vector<VertexSet> lab{cur.labels[i][0] & cur.labels[j][0]};
        lab.insert(lab.end(), cur.labels[i].begin(), cur.labels[i].end());
        out.labels.push_back(std::move(lab));
      }
    }
  }
  return out;
}

template <class S>
SchreyerResolution<S> schreyer_resolution(const std::vector<Polynomial<S>>& gens, const PointedGraph& g,
                                          const SchreyerOptions& opt,
                                          const std::vector<std::vector<VertexSet>>& labels = {}) {
  const TermOrder order = bfs_term_order(g);
  SchreyerResolution<S> res;
  res.orders.push_back(ModuleOrder::for_ring(order));
  SchreyerLevel<S> lvl;
  lvl.order = &res.orders.back();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    lvl.elements.push_back(ModuleElement<S>::from_polynomial(lvl.order, gens[i]));
    lvl.tot.push_back(lvl.elements.back().lead().exp.to_divisor(g.n()));
    if (!labels.empty()) lvl.labels.push_back(labels[i]);
  }
  if (opt.policy == SchreyerPolicy::FlagChains && lvl.labels.size() != lvl.elements.size())
    throw Error(ErrorKind::LengthMismatch, "flag-chain policy needs one label per generator");
  while (!lvl.elements.empty() && static_cast<int>(res.levels.size()) < opt.max_len) {
    detail::sort_level(lvl, opt.policy, order);
    std::vector<Monomial> shift;
    std::vector<std::vector<int>> chain;
    for (std::size_t i = 0; i < lvl.elements.size(); ++i) {
      const auto& lm = lvl.elements[i].lead();
      shift.push_back(lm.exp + lvl.order->shift(lm.basis));
      auto ch = lvl.order->chain(lm.basis);
      ch.push_back(static_cast<int>(i));
      chain.push_back(std::move(ch));
    }
    res.orders.emplace_back(order, std::move(shift), std::move(chain));
    SchreyerLevel<S> next = schreyer_step(lvl, &res.orders.back(), g, opt.full_pairs);
    res.levels.push_back(std::move(lvl));
    lvl = std::move(next);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Hochster-style oracle

struct SimplicialComplex {
  int n = 0;
  std::vector<VertexSet> facets;  // empty list = void complex; {0} = the complex {∅}
};

// Δ_j = {supp(E) : 0 ≤ E ≤ D', D' ∈ |j|}.
SimplicialComplex delta_complex(const PointedGraph& g, const Divisor& j);

// dims[t] = dim H̃_{t−1}, t = 0..dim+1.  The void complex gives an empty list.
template <class F>
std::vector<long> reduced_homology_dims(const SimplicialComplex& c, const F& field) {
  using S = typename F::Scalar;
  if (c.facets.empty()) return {};
  std::vector<std::vector<VertexSet>> faces;  // faces[t] = faces with t vertices
  std::map<VertexSet, int> seen;
  for (VertexSet f : c.facets)
    for (VertexSet s = f;; s = (s - 1) & f) {
      if (!seen.count(s)) {
        const int t = set_size(s);
        if (static_cast<int>(faces.size()) <= t) faces.resize(t + 1);
        seen[s] = static_cast<int>(faces[t].size());
        faces[t].push_back(s);
      }
      if (s == 0) break;
    }
  std::vector<long> rank(faces.size() + 1, 0);  // rank[t]: ∂ from t-vertex faces to (t−1)-vertex faces
  for (std::size_t t = 1; t < faces.size(); ++t) {
    std::vector<std::vector<S>> m(faces[t - 1].size(), std::vector<S>(faces[t].size(), field.from_int(0)));
    for (std::size_t col = 0; col < faces[t].size(); ++col) {
      const auto vs = members(faces[t][col]);
      for (std::size_t p = 0; p < vs.size(); ++p)
        m[seen.at(faces[t][col] & ~singleton(vs[p]))][col] = field.from_int(p % 2 ? -1 : 1);
    }
    rank[t] = matrix_rank(m);
  }
  std::vector<long> dims;
  for (std::size_t t = 0; t < faces.size(); ++t)
    dims.push_back(static_cast<long>(faces[t].size()) - rank[t] - rank[t + 1]);
  return dims;
}

// β_{i,j} = dim H̃_{i−1}(Δ_j).
template <class F>
long hochster_betti(const PointedGraph& g, int i, const Divisor& j, const F& field) {
  const auto dims = reduced_homology_dims(delta_complex(g, j), field);
  return i >= 0 && i < static_cast<int>(dims.size()) ? dims[i] : 0;
}

// Number of orientation classes among all connected k-flags, found by
// labelling every vertex with a part index and validating the result.
long brute_force_class_count(const PointedGraph& g, int k);

}  // namespace toppling
