#include "toppling/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace toppling {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BadVertex: return "BadVertex";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::BadMultiplicity: return "BadMultiplicity";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::Overlap: return "Overlap";
    case ErrorKind::NegativeOffQ: return "NegativeOffQ";
    case ErrorKind::MissingQ: return "MissingQ";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::LastNotV: return "LastNotV";
    case ErrorKind::PartDisconnected: return "PartDisconnected";
    case ErrorKind::PrefixDisconnected: return "PrefixDisconnected";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::TailMismatch: return "TailMismatch";
    case ErrorKind::BadPartIndex: return "BadPartIndex";
    case ErrorKind::NotMinimalRep: return "NotMinimalRep";
    case ErrorKind::NotMergedFrom: return "NotMergedFrom";
    case ErrorKind::NotAFlag: return "NotAFlag";
    case ErrorKind::LeadingTermMismatch: return "LeadingTermMismatch";
    case ErrorKind::CompositionNonzero: return "CompositionNonzero";
    case ErrorKind::UnitEntry: return "UnitEntry";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::NotGroebner: return "NotGroebner";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Monomial Monomial::from_divisor(const Divisor& d) {
  if (d.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error(ErrorKind::TooLarge, "monomials support at most 16 variables");
  Monomial m;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) throw Error(ErrorKind::NegativeOffQ, "monomial exponent must be nonnegative");
    m.e[i] = static_cast<std::int16_t>(d[i]);
  }
  return m;
}

Divisor Monomial::to_divisor(int n) const { return Divisor(e.begin(), e.begin() + n); }

int Monomial::degree() const {
  int s = 0;
  for (auto x : e) s += x;
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVertices; ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::operator+(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVertices; ++i) r.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
  return r;
}

Monomial Monomial::operator-(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVertices; ++i) r.e[i] = static_cast<std::int16_t>(e[i] - o.e[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVertices; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(__builtin_ctz(s));
    s &= s - 1;
  }
  return out;
}

VertexSet make_set(const std::vector<int>& vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= singleton(v);
  return s;
}

int PointedGraph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < n_; ++w) d += mult(v, w);
  return d;
}

int PointedGraph::pair_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  return pair_index_[u * n_ + v];
}

PointedGraph PointedGraph::with_q(int q) const {
  if (q < 0 || q >= n_) throw Error(ErrorKind::BadVertex, "q out of range");
  PointedGraph g = *this;
  g.q_ = q;
  return g;
}

PointedGraph build_graph(int n, const std::vector<Edge>& edges, int q) {
  if (n <= 0) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  if (n > kMaxVertices)
    throw Error(ErrorKind::TooLarge, "at most " + std::to_string(kMaxVertices) + " vertices supported");
  if (q < 0 || q >= n) throw Error(ErrorKind::BadVertex, "q = " + std::to_string(q + 1) + " out of range");
  PointedGraph g;
  g.n_ = n;
  g.q_ = q;
  g.mult_.assign(n * n, 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw Error(ErrorKind::BadVertex, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(e.u + 1));
    if (e.mult < 1) throw Error(ErrorKind::BadMultiplicity, "multiplicity must be >= 1");
    g.mult_[e.u * n + e.v] += e.mult;
    g.mult_[e.v * n + e.u] += e.mult;
    g.m_ += e.mult;
  }
  g.pair_index_.assign(n * n, -1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.mult(u, v) > 0) {
        g.pair_index_[u * n + v] = static_cast<int>(g.pairs_.size());
        g.pairs_.emplace_back(u, v);
      }
  if (!induced_connected(g, g.all())) throw Error(ErrorKind::Disconnected, "graph is not connected");
  return g;
}

bool induced_connected(const PointedGraph& g, VertexSet s) {
  if (s == 0) throw Error(ErrorKind::EmptySet, "connectivity of the empty set is undefined");
  VertexSet seen = s & (~s + 1);
  VertexSet frontier = seen;
  while (frontier) {
    int u = __builtin_ctz(frontier);
    frontier &= frontier - 1;
    for (int w : members(s & ~seen))
      if (g.mult(u, w) > 0) {
        seen |= singleton(w);
        frontier |= singleton(w);
      }
  }
  return seen == s;
}

Divisor boundary_divisor(const PointedGraph& g, VertexSet a, VertexSet b) {
  if (a & b) throw Error(ErrorKind::Overlap, "boundary divisor needs disjoint sets");
  Divisor d(g.n(), 0);
  for (int v : members(a))
    for (int w : members(b)) d[v] += g.mult(v, w);
  return d;
}

int edge_count_between(const PointedGraph& g, VertexSet a, VertexSet b) {
  int s = 0;
  for (int x : boundary_divisor(g, a, b)) s += x;
  return s;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int v : priority) {
    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
  }
  return 0;
}

TermOrder bfs_term_order(const PointedGraph& g) {
  std::vector<int> dist(g.n(), -1);
  std::deque<int> queue{g.q()};
  dist[g.q()] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w = 0; w < g.n(); ++w)
      if (g.mult(u, w) > 0 && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  TermOrder order;
  order.priority.resize(g.n());
  for (int v = 0; v < g.n(); ++v) order.priority[v] = v;
  std::stable_sort(order.priority.begin(), order.priority.end(),
                   [&](int a, int b) { return dist[a] < dist[b]; });
  order.rank.assign(g.n(), 0);
  for (int r = 0; r < g.n(); ++r) order.rank[order.priority[r]] = r;
  return order;
}

Divisor indegree_divisor(const PointedGraph& g, const PartialOrientation& o) {
  Divisor d(g.n(), 0);
  const auto& pairs = g.adjacent_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (o.state[i] == EdgeState::Forward) d[v] += g.mult(u, v);
    if (o.state[i] == EdgeState::Backward) d[u] += g.mult(u, v);
  }
  return d;
}

}  // namespace toppling
