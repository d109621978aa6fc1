#include "test_support.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

namespace support {

using namespace toppling;

PointedGraph graph1(int n, const std::vector<std::vector<int>>& edges, int q) {
  std::vector<Edge> es;
  for (const auto& e : edges) es.push_back({e[0] - 1, e[1] - 1, e.size() > 2 ? e[2] : 1});
  return build_graph(n, es, q - 1);
}

PointedGraph c4() { return graph1(4, {{1, 2}, {2, 4}, {4, 3}, {3, 1}}); }
PointedGraph g5() { return graph1(5, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}); }

PointedGraph cycle(int n) {
  std::vector<std::vector<int>> e;
  for (int i = 1; i <= n; ++i) e.push_back({i, i % n + 1});
  return graph1(n, e);
}

PointedGraph path(int n) {
  std::vector<std::vector<int>> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return graph1(n, e);
}

PointedGraph complete(int n) {
  std::vector<std::vector<int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
  return graph1(n, e);
}

PointedGraph theta(int m) { return graph1(2, {{1, 2, m}}); }

PointedGraph random_multigraph(std::mt19937& rng, int n, int m) {
  std::vector<Edge> es;
  // random spanning tree first, then extra edges anywhere
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    es.push_back({pick(rng), v, 1});
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  while (static_cast<int>(es.size()) < m) {
    int u = any(rng), v = any(rng);
    if (u != v) es.push_back({u, v, 1});
  }
  // relabel so the tree is not always rooted at vertex 0
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& e : es) e = {perm[e.u], perm[e.v], 1};
  return build_graph(n, es, 0);
}

std::vector<PointedGraph> random_corpus(int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<PointedGraph> out;
  while (static_cast<int>(out.size()) < count) {
    std::uniform_int_distribution<int> nd(2, 6);
    const int n = nd(rng);
    std::uniform_int_distribution<int> md(n - 1, std::min(10, n - 1 + 5));
    out.push_back(random_multigraph(rng, n, md(rng)));
  }
  return out;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long long brute_spanning_trees(const PointedGraph& g) {
  const int n = g.n();
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.adjacent_pairs())
    for (int r = 0; r < g.mult(u, v); ++r) edges.emplace_back(u, v);
  const int m = static_cast<int>(edges.size());
  if (n == 1) return 1;
  long long count = 0;
  std::vector<int> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + (n - 1), 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool forest = true;
    for (int i = 0; i < m && forest; ++i) {
      if (!pick[i]) continue;
      int a = find(edges[i].first), b = find(edges[i].second);
      if (a == b) forest = false;
      else parent[a] = b;
    }
    if (forest) ++count;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

bool brute_equivalent(const PointedGraph& g, const Divisor& d1, const Divisor& d2) {
  const int n = g.n();
  long deg = 0;
  for (int v = 0; v < n; ++v) deg += d1[v] - d2[v];
  if (deg != 0) return false;
  // Solve L' f = b on the vertices other than q (f(q) = 0); b = d1 - d2.
  std::vector<int> idx;
  for (int v = 0; v < n; ++v)
    if (v != g.q()) idx.push_back(v);
  const int r = static_cast<int>(idx.size());
  std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(r + 1));
  for (int i = 0; i < r; ++i) {
    const int v = idx[i];
    for (int j = 0; j < r; ++j) {
      const int w = idx[j];
      a[i][j] = v == w ? g.degree(v) : -g.mult(v, w);
    }
    a[i][r] = d1[v] - d2[v];
  }
  for (int c = 0; c < r; ++c) {
    int piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    for (int i = 0; i < r; ++i) {
      if (i == c || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[c][c];
      for (int j = c; j <= r; ++j) a[i][j] -= f * a[c][j];
    }
  }
  for (int i = 0; i < r; ++i) {
    mpq_class x = a[i][r] / a[i][i];
    x.canonicalize();
    if (x.get_den() != 1) return false;
  }
  return true;
}

long brute_unique_source_orientations(const PointedGraph& g) {
  const auto& pairs = g.adjacent_pairs();
  const int p = static_cast<int>(pairs.size()), n = g.n();
  long count = 0;
  for (long mask = 0; mask < (1L << p); ++mask) {
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (int i = 0; i < p; ++i) {
      auto [u, v] = pairs[i];
      if (mask >> i & 1) std::swap(u, v);
      out[u].push_back(v);
      ++indeg[v];
    }
    bool ok = indeg[g.q()] == 0;
    for (int v = 0; v < n && ok; ++v)
      if (v != g.q() && indeg[v] == 0) ok = false;
    if (!ok) continue;
    // Kahn: acyclic iff every vertex gets removed
    std::vector<int> deg = indeg, stack{g.q()};
    int removed = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++removed;
      for (int w : out[u])
        if (--deg[w] == 0) stack.push_back(w);
    }
    if (removed == n) ++count;
  }
  return count;
}

}  // namespace support
