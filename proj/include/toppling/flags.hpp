#pragma once

#include <map>
#include <vector>

#include "toppling/divisor.hpp"
#include "toppling/graph.hpp"

namespace toppling {

struct ConnectedFlag {
  std::vector<VertexSet> chain;  // U_1 ⊊ ... ⊊ U_k = V

  int k() const { return static_cast<int>(chain.size()); }
  // Part A_l = U_l \ U_{l-1}, 0-based l.
  VertexSet part(int l) const { return l == 0 ? chain[0] : chain[l] & ~chain[l - 1]; }
  std::vector<VertexSet> parts() const;

  friend bool operator==(const ConnectedFlag& a, const ConnectedFlag& b) { return a.chain == b.chain; }
  friend bool operator!=(const ConnectedFlag& a, const ConnectedFlag& b) { return a.chain != b.chain; }
};

// Builds the flag whose parts are listed in order.
ConnectedFlag flag_from_parts(const std::vector<VertexSet>& parts);

ConnectedFlag validate_flag(const PointedGraph& g, const std::vector<VertexSet>& chain);
PartialOrientation flag_orientation(const PointedGraph& g, const ConnectedFlag& uc);
PartialOrientation orientation_from_parts(const PointedGraph& g, const std::vector<VertexSet>& parts);
Divisor flag_divisor(const PointedGraph& g, const ConnectedFlag& uc);

// The fixed subset order: larger cardinality first, then lexicographic on
// the sorted member lists.
bool subset_less(VertexSet a, VertexSet b);
bool flag_less(const ConnectedFlag& u, const ConnectedFlag& v);
bool flags_equivalent(const PointedGraph& g, const ConnectedFlag& u, const ConnectedFlag& v);

// Every connected k-flag of (G, q).
std::vector<ConnectedFlag> enumerate_connected_flags(const PointedGraph& g, int k);

struct FlagBasis {
  int k = 0;
  std::vector<ConnectedFlag> flags;  // ascending in ≺_k
  std::map<PartialOrientation, int> index;

  int size() const { return static_cast<int>(flags.size()); }
  // Position of the class with this orientation, or -1.
  int find(const PartialOrientation& o) const;
};

FlagBasis enumerate_minimal_flags(const PointedGraph& g, int k);

ConnectedFlag drop_first(const PointedGraph& g, const ConnectedFlag& uc);
ConnectedFlag drop_second(const PointedGraph& g, const ConnectedFlag& uc);

Divisor kappa(const PointedGraph& g, const ConnectedFlag& w, const ConnectedFlag& v);
// The alternate expression max(D(W2\(W1∪V1),W1), D(W2\(W1∪V1),V1)) + D(V1\W1,W1) + D(W1\V1,V1).
Divisor kappa_alternate(const PointedGraph& g, const ConnectedFlag& w, const ConnectedFlag& v);

struct Contraction {
  PointedGraph graph;            // vertex i <-> part A_i, distinguished vertex 0
  std::vector<int> vertex_map;   // v -> index of its part
};

Contraction contract(const PointedGraph& g, const ConnectedFlag& uc);
Divisor pushforward_divisor(const std::vector<int>& vertex_map, const Divisor& d, int target_size);
ConnectedFlag pullback_flag(const PointedGraph& g, const std::vector<int>& vertex_map,
                            const ConnectedFlag& vc_prime);

// o_0 = G(U); o_j reverses every edge between A_j and its complement in o_{j-1} (1-based j).
PartialOrientation reversal_orientation(const PointedGraph& g, const ConnectedFlag& uc, int j);

struct MergeTerm {
  int target = -1;  // index of the merged flag in S_{k-1}
  int tail = 0;     // merged parts, 0-based, edges oriented tail -> head
  int head = 0;
  int stage = 0;    // 0: mergeable in G(U); j >= 1: mergeable in o_j(U)
  int sign = 1;     // ε(U, W)
  Divisor theta;    // θ(U, W) = D(A_head, A_tail)
};

struct MergeSets {
  std::vector<MergeTerm> i_set;
  std::vector<MergeTerm> b_set;  // I(U) first, then the o_j merges
};

enum class Variant { Binomial, Monomial };

// Owns S_1..S_n for one pointed graph and answers the flag-calculus queries
// that drive the resolution.
class FlagCalculus {
 public:
  explicit FlagCalculus(PointedGraph g);

  const PointedGraph& graph() const { return g_; }
  int n() const { return g_.n(); }
  const FlagBasis& basis(int k) const;

  // Position of uc in S_k; throws NotMinimalRep when uc is not a stored representative.
  int index_of(const ConnectedFlag& uc) const;
  // ≺_{k}-minimal representative equivalent to uc.
  const ConnectedFlag& representative(const ConnectedFlag& uc) const;

  // I(U), B(U) for k >= 3; empty for k <= 2.
  MergeSets merge_sets(const ConnectedFlag& uc) const;
  // The terms of φ applied to [ψ(U)] for any k >= 2 (for k = 2 the two sides
  // of the generating binomial, merged into the 1-flag).
  std::vector<MergeTerm> boundary_terms(const ConnectedFlag& uc, Variant variant) const;

  int incidence_sign(const ConnectedFlag& uc, const ConnectedFlag& wc) const;
  Divisor theta(const ConnectedFlag& uc, const ConnectedFlag& wc) const;

 private:
  MergeSets compute_merges(const ConnectedFlag& uc) const;
  int canonical_merge(const std::vector<VertexSet>& parts,
                      const std::vector<std::pair<int, int>>& arcs) const;
  MergeTerm find_term(const ConnectedFlag& uc, const ConnectedFlag& wc) const;

  PointedGraph g_;
  std::vector<FlagBasis> bases_;  // bases_[k], k = 1..n
};

}  // namespace toppling
