#include "toppling/divisor.hpp"

#include <gmpxx.h>

#include <functional>
#include <set>
#include <string>

namespace toppling {

int degree(const Divisor& d) {
  int s = 0;
  for (int x : d) s += x;
  return s;
}

bool is_effective(const Divisor& d) {
  for (int x : d)
    if (x < 0) return false;
  return true;
}

Divisor add(const Divisor& a, const Divisor& b) {
  Divisor r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Divisor subtract(const Divisor& a, const Divisor& b) {
  Divisor r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Divisor ones(int n) { return Divisor(n, 1); }

Divisor laplacian_of(const PointedGraph& g, const IntFunction& f) {
  Divisor d(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    for (int w = 0; w < g.n(); ++w) d[v] += g.mult(v, w) * (f[v] - f[w]);
  return d;
}

namespace {

void check_size(const PointedGraph& g, const Divisor& d) {
  if (static_cast<int>(d.size()) != g.n())
    throw Error(ErrorKind::BadVertex, "divisor length " + std::to_string(d.size()) +
                                          " does not match vertex count " + std::to_string(g.n()));
}

std::vector<int> burn(const PointedGraph& g, int q, const Divisor& d, VertexSet* survivors) {
  check_size(g, d);
  for (int v = 0; v < g.n(); ++v)
    if (v != q && d[v] < 0) throw Error(ErrorKind::NegativeOffQ, "negative value off q");
  std::vector<int> into_burnt(g.n(), 0);
  VertexSet burnt = singleton(q);
  std::vector<int> order{q};
  for (int w = 0; w < g.n(); ++w) into_burnt[w] = g.mult(w, q);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < g.n(); ++v) {
      if (contains(burnt, v) || d[v] >= into_burnt[v]) continue;
      burnt |= singleton(v);
      order.push_back(v);
      for (int w = 0; w < g.n(); ++w) into_burnt[w] += g.mult(w, v);
      progress = true;
      break;
    }
  }
  if (survivors) *survivors = g.all() & ~burnt;
  return order;
}

}  // namespace

VertexSet dhar_burn(const PointedGraph& g, int q, const Divisor& d) {
  VertexSet rest = 0;
  burn(g, q, d, &rest);
  return rest;
}

std::vector<int> dhar_burn_order(const PointedGraph& g, int q, const Divisor& d) {
  return burn(g, q, d, nullptr);
}

bool is_q_reduced(const PointedGraph& g, int q, const Divisor& d) {
  check_size(g, d);
  for (int v = 0; v < g.n(); ++v)
    if (v != q && d[v] < 0) return false;
  return dhar_burn(g, q, d) == 0;
}

Divisor q_reduce(const PointedGraph& g, int q, const Divisor& d) {
  check_size(g, d);
  Divisor r(d);
  // Debt removal: an indebted vertex borrows from all neighbours.  This is
  // sandpile stabilisation with sink q in disguise, so it terminates.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < g.n(); ++v) {
      if (v == q || r[v] >= 0) continue;
      for (int w = 0; w < g.n(); ++w) {
        r[v] += g.mult(v, w);
        r[w] -= g.mult(v, w);
      }
      progress = true;
    }
  }
  // Fire the unburnt set until Dhar's algorithm burns everything.
  for (;;) {
    VertexSet a = dhar_burn(g, q, r);
    if (a == 0) return r;
    for (int v : members(a))
      for (int w : members(g.all() & ~a)) {
        r[v] -= g.mult(v, w);
        r[w] += g.mult(v, w);
      }
  }
}

bool linearly_equivalent(const PointedGraph& g, const Divisor& d1, const Divisor& d2) {
  if (degree(d1) != degree(d2)) return false;
  return q_reduce(g, g.q(), d1) == q_reduce(g, g.q(), d2);
}

PicClass pic_class(const PointedGraph& g, int q, const Divisor& d) { return PicClass{q_reduce(g, q, d)}; }

long long spanning_tree_count(const PointedGraph& g) {
  // Bareiss elimination on the Laplacian with row/column q removed.
  const int n = g.n() - 1;
  if (n == 0) return 1;
  std::vector<int> idx;
  for (int v = 0; v < g.n(); ++v)
    if (v != g.q()) idx.push_back(v);
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[i][j] = i == j ? g.degree(idx[i]) : -g.mult(idx[i], idx[j]);
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  mpz_class det = sign * a[n - 1][n - 1];
  if (!det.fits_slong_p()) throw Error(ErrorKind::TooLarge, "spanning tree count overflows");
  return det.get_si();
}

std::vector<Divisor> effective_divisors(int n, int deg) {
  std::vector<Divisor> out;
  if (deg < 0) return out;
  Divisor cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[pos] = x;
      rec(pos + 1, left - x);
    }
  };
  rec(0, deg);
  return out;
}

std::vector<Divisor> linear_system(const PointedGraph& g, int q, const Divisor& d) {
  check_size(g, d);
  std::vector<Divisor> out;
  const Divisor target = q_reduce(g, q, d);
  for (auto& e : effective_divisors(g.n(), degree(d)))
    if (q_reduce(g, q, e) == target) out.push_back(std::move(e));
  return out;
}

std::vector<PartialOrientation> acyclic_orientations_unique_source(const PointedGraph& g, int q) {
  // Every such orientation is induced by a linear order starting at q in which
  // each later vertex has an earlier neighbour; distinct orders may induce the
  // same orientation, hence the set.
  std::set<PartialOrientation> seen;
  std::vector<int> position(g.n(), -1);
  position[q] = 0;
  const auto& pairs = g.adjacent_pairs();
  std::function<void(int, VertexSet)> rec = [&](int placed, VertexSet done) {
    if (placed == g.n()) {
      PartialOrientation o;
      o.state.reserve(pairs.size());
      for (auto [u, v] : pairs)
        o.state.push_back(position[u] < position[v] ? EdgeState::Forward : EdgeState::Backward);
      seen.insert(std::move(o));
      return;
    }
    for (int v = 0; v < g.n(); ++v) {
      if (contains(done, v)) continue;
      bool reachable = false;
      for (int w : members(done))
        if (g.mult(v, w) > 0) reachable = true;
      if (!reachable) continue;
      position[v] = placed;
      rec(placed + 1, done | singleton(v));
      position[v] = -1;
    }
  };
  rec(1, singleton(q));
  return {seen.begin(), seen.end()};
}

std::vector<Divisor> maximal_reduced_divisors(const PointedGraph& g, int q) {
  std::vector<Divisor> out;
  for (const auto& o : acyclic_orientations_unique_source(g, q)) {
    Divisor d = indegree_divisor(g, o);
    for (int& x : d) x -= 1;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Divisor> reduced_configurations(const PointedGraph& g, int q) {
  std::vector<Divisor> out;
  Divisor cur(g.n(), 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == g.n()) {
      if (dhar_burn(g, q, cur) == 0) out.push_back(cur);
      return;
    }
    if (v == q) {
      rec(v + 1);
      return;
    }
    for (int x = 0; x < g.degree(v); ++x) {
      cur[v] = x;
      rec(v + 1);
    }
    cur[v] = 0;
  };
  rec(0);
  return out;
}

}  // namespace toppling
