#pragma once

#include <vector>

#include "toppling/graph.hpp"

namespace toppling {

using IntFunction = std::vector<int>;

struct PicClass {
  Divisor rep;  // the q-reduced representative

  friend bool operator==(const PicClass& a, const PicClass& b) { return a.rep == b.rep; }
  friend bool operator<(const PicClass& a, const PicClass& b) { return a.rep < b.rep; }
};

int degree(const Divisor& d);
bool is_effective(const Divisor& d);
Divisor add(const Divisor& a, const Divisor& b);
Divisor subtract(const Divisor& a, const Divisor& b);
Divisor ones(int n);

Divisor laplacian_of(const PointedGraph& g, const IntFunction& f);

// Survivors of Dhar's burning algorithm started at q; empty iff d is q-reduced.
VertexSet dhar_burn(const PointedGraph& g, int q, const Divisor& d);
// The burn sequence (q first); vertices never burnt are omitted.
std::vector<int> dhar_burn_order(const PointedGraph& g, int q, const Divisor& d);

bool is_q_reduced(const PointedGraph& g, int q, const Divisor& d);
Divisor q_reduce(const PointedGraph& g, int q, const Divisor& d);
bool linearly_equivalent(const PointedGraph& g, const Divisor& d1, const Divisor& d2);
PicClass pic_class(const PointedGraph& g, int q, const Divisor& d);

long long spanning_tree_count(const PointedGraph& g);

std::vector<Divisor> linear_system(const PointedGraph& g, int q, const Divisor& d);
// All effective divisors of the given degree, in lexicographic order.
std::vector<Divisor> effective_divisors(int n, int deg);

std::vector<PartialOrientation> acyclic_orientations_unique_source(const PointedGraph& g, int q);
std::vector<Divisor> maximal_reduced_divisors(const PointedGraph& g, int q);

// q-reduced divisors with value 0 at q ("superstable" configurations).
std::vector<Divisor> reduced_configurations(const PointedGraph& g, int q);

}  // namespace toppling
