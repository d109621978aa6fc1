#include "toppling/oracle.hpp"

#include <set>

namespace toppling {

SimplicialComplex delta_complex(const PointedGraph& g, const Divisor& j) {
  std::set<VertexSet> supports;
  for (const auto& d : linear_system(g, g.q(), j)) {
    VertexSet s = 0;
    for (int v = 0; v < g.n(); ++v)
      if (d[v] > 0) s |= singleton(v);
    supports.insert(s);
  }
  SimplicialComplex c;
  c.n = g.n();
  for (VertexSet s : supports) {
    bool maximal = true;
    for (VertexSet t : supports)
      if (t != s && (s & ~t) == 0) maximal = false;
    if (maximal) c.facets.push_back(s);
  }
  return c;
}

long brute_force_class_count(const PointedGraph& g, int k) {
  const int n = g.n();
  if (k < 1 || k > n) throw Error(ErrorKind::BadK, "k must lie in 1..n");
  std::set<PartialOrientation> classes;
  std::vector<int> label(n, 0);
  while (true) {
    std::vector<VertexSet> chain(k, 0);
    for (int v = 0; v < n; ++v)
      for (int l = label[v]; l < k; ++l) chain[l] |= singleton(v);
    try {
      classes.insert(flag_orientation(g, validate_flag(g, chain)));
    } catch (const Error&) {
    }
    int v = 0;
    while (v < n && ++label[v] == k) label[v++] = 0;
    if (v == n) break;
  }
  return static_cast<long>(classes.size());
}

}  // namespace toppling
