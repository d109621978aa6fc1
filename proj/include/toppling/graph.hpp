#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "toppling/error.hpp"
#include "toppling/monomial.hpp"

namespace toppling {

// Bitmask over vertex indices 0..n-1.
using VertexSet = std::uint32_t;

inline int set_size(VertexSet s) { return __builtin_popcount(s); }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet singleton(int v) { return VertexSet{1} << v; }
std::vector<int> members(VertexSet s);
VertexSet make_set(const std::vector<int>& vertices);

struct Edge {
  int u = 0;
  int v = 0;
  int mult = 1;
};

class PointedGraph {
 public:
  PointedGraph() = default;

  int n() const { return n_; }
  int q() const { return q_; }
  int mult(int u, int v) const { return mult_[u * n_ + v]; }
  int degree(int v) const;
  // m = |E(G)| counted with multiplicity.
  int edge_count() const { return m_; }
  int genus() const { return m_ - n_ + 1; }
  VertexSet all() const { return n_ == 32 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }

  // Unordered adjacent pairs (u < v, mult > 0) in lexicographic order.  Partial
  // orientations are indexed by position in this list.
  const std::vector<std::pair<int, int>>& adjacent_pairs() const { return pairs_; }
  int pair_index(int u, int v) const;

  PointedGraph with_q(int q) const;

  friend bool operator==(const PointedGraph& a, const PointedGraph& b) {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.mult_ == b.mult_;
  }

 private:
  friend PointedGraph build_graph(int n, const std::vector<Edge>& edges, int q);

  int n_ = 0;
  int q_ = 0;
  int m_ = 0;
  std::vector<int> mult_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_index_;
};

// Validates and accumulates repeated edge lines.  Vertices are 0-based here;
// file formats are 1-based (see io.hpp).
PointedGraph build_graph(int n, const std::vector<Edge>& edges, int q);

bool induced_connected(const PointedGraph& g, VertexSet s);
Divisor boundary_divisor(const PointedGraph& g, VertexSet a, VertexSet b);
int edge_count_between(const PointedGraph& g, VertexSet a, VertexSet b);

// Degree reverse lexicographic order; priority[r] is the vertex whose variable
// has rank r (rank 0 = smallest variable).
struct TermOrder {
  std::vector<int> priority;
  std::vector<int> rank;

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

TermOrder bfs_term_order(const PointedGraph& g);

enum class EdgeState : std::int8_t { Backward = -1, Unoriented = 0, Forward = 1 };

// One state per entry of g.adjacent_pairs(); Forward means u -> v for the pair (u, v), u < v.
struct PartialOrientation {
  std::vector<EdgeState> state;

  friend bool operator==(const PartialOrientation& a, const PartialOrientation& b) {
    return a.state == b.state;
  }
  friend bool operator<(const PartialOrientation& a, const PartialOrientation& b) {
    return a.state < b.state;
  }
};

// Σ_v indeg(v)·(v), parallel edges counted.
Divisor indegree_divisor(const PointedGraph& g, const PartialOrientation& o);

}  // namespace toppling
