#pragma once

#include <string>
#include <vector>

#include "toppling/divisor.hpp"
#include "toppling/flags.hpp"
#include "toppling/resolution.hpp"

namespace toppling {

// Text graph format, 1-based vertices:
//   # comment
//   v 4
//   q 1
//   e 1 2 [mult]
// The JSON form {"n":4,"q":1,"edges":[[1,2,1],...]} is accepted as well; the
// first non-blank character decides which parser runs.  A missing q line
// means q = 1.
PointedGraph parse_graph(const std::string& text);
PointedGraph load_graph(const std::string& path);
std::string format_graph(const PointedGraph& g);
std::string format_graph_json(const PointedGraph& g);

// `{1} < {1,2} < {1,2,3,4}`; whitespace is optional.
ConnectedFlag parse_flag_literal(const PointedGraph& g, const std::string& text);
std::string format_flag(const ConnectedFlag& f);

// Space-separated integers in vertex order.
Divisor parse_divisor(const std::string& text, int n);
std::string format_divisor(const Divisor& d);

enum class Grading { Z, Pic };

std::string betti_tsv(const BettiTable& t, Grading grading);
std::string betti_json(const BettiTable& t, Grading grading);

// Partial orientation as a DOT digraph: `u -> v` for oriented pairs (one
// line per parallel edge), `u -> v [dir=none]` for unoriented ones.
std::string orientation_dot(const PointedGraph& g, const PartialOrientation& o, const std::string& name = "G");

// Basis listings followed by one block per differential:
//   basis <i> <index> <flag>
//   phi <k> <rows> <cols>
//   <row> <col> <polynomial>
// Matrix indices are 0-based positions in the basis listings.
template <class S>
std::string resolution_text(const FreeResolution<S>& res, int n) {
  std::string out;
  for (std::size_t i = 0; i < res.bases.size(); ++i)
    for (int e = 0; e < res.bases[i].size(); ++e)
      out += "basis " + std::to_string(i) + " " + std::to_string(e) + " " + format_flag(res.bases[i].flags[e]) +
             "\n";
  for (std::size_t k = 0; k < res.diffs.size(); ++k) {
    const auto& m = res.diffs[k];
    out += "phi " + std::to_string(k) + " " + std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
    for (int c = 0; c < m.cols; ++c)
      for (const auto& [r, p] : m.columns[c])
        out += std::to_string(r) + " " + std::to_string(c) + " " + polynomial_to_string(p, n) + "\n";
  }
  return out;
}

}  // namespace toppling
