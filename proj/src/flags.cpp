#include "toppling/flags.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace toppling {

std::vector<VertexSet> ConnectedFlag::parts() const {
  std::vector<VertexSet> out;
  for (int l = 0; l < k(); ++l) out.push_back(part(l));
  return out;
}

ConnectedFlag flag_from_parts(const std::vector<VertexSet>& parts) {
  ConnectedFlag f;
  VertexSet acc = 0;
  for (VertexSet p : parts) {
    acc |= p;
    f.chain.push_back(acc);
  }
  return f;
}

ConnectedFlag validate_flag(const PointedGraph& g, const std::vector<VertexSet>& chain) {
  if (chain.empty()) throw Error(ErrorKind::LastNotV, "empty chain");
  if (!contains(chain[0], g.q())) throw Error(ErrorKind::MissingQ, "q is not in U_1", 1);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] & ~g.all()) throw Error(ErrorKind::BadVertex, "vertex out of range", static_cast<int>(i) + 1);
    if (i > 0 && (chain[i - 1] == chain[i] || (chain[i - 1] & ~chain[i])))
      throw Error(ErrorKind::NotIncreasing, "U_" + std::to_string(i) + " is not strictly inside U_" +
                                                std::to_string(i + 1), static_cast<int>(i) + 1);
  }
  if (chain.back() != g.all()) throw Error(ErrorKind::LastNotV, "last set is not V(G)");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!induced_connected(g, chain[i]))
      throw Error(ErrorKind::PrefixDisconnected, "G[U_" + std::to_string(i + 1) + "] is not connected",
                  static_cast<int>(i) + 1);
    if (i > 0 && !induced_connected(g, chain[i] & ~chain[i - 1]))
      throw Error(ErrorKind::PartDisconnected,
                  "G[U_" + std::to_string(i + 1) + " \\ U_" + std::to_string(i) + "] is not connected",
                  static_cast<int>(i));
  }
  return ConnectedFlag{chain};
}

PartialOrientation orientation_from_parts(const PointedGraph& g, const std::vector<VertexSet>& parts) {
  std::vector<int> part_of(g.n(), -1);
  for (std::size_t l = 0; l < parts.size(); ++l)
    for (int v : members(parts[l])) part_of[v] = static_cast<int>(l);
  PartialOrientation o;
  o.state.reserve(g.adjacent_pairs().size());
  for (auto [u, v] : g.adjacent_pairs()) {
    int pu = part_of[u], pv = part_of[v];
    o.state.push_back(pu < pv ? EdgeState::Forward : pu > pv ? EdgeState::Backward : EdgeState::Unoriented);
  }
  return o;
}

PartialOrientation flag_orientation(const PointedGraph& g, const ConnectedFlag& uc) {
  return orientation_from_parts(g, uc.parts());
}

Divisor flag_divisor(const PointedGraph& g, const ConnectedFlag& uc) {
  Divisor d(g.n(), 0);
  for (int l = 1; l < uc.k(); ++l) d = add(d, boundary_divisor(g, uc.part(l), uc.chain[l - 1]));
  return d;
}

bool subset_less(VertexSet a, VertexSet b) {
  if (set_size(a) != set_size(b)) return set_size(a) > set_size(b);
  return members(a) < members(b);
}

bool flag_less(const ConnectedFlag& u, const ConnectedFlag& v) {
  if (u.k() != v.k()) throw Error(ErrorKind::LengthMismatch, "flags of different length");
  for (int l = u.k() - 1; l >= 0; --l)
    if (u.chain[l] != v.chain[l]) return subset_less(u.chain[l], v.chain[l]);
  return false;
}

bool flags_equivalent(const PointedGraph& g, const ConnectedFlag& u, const ConnectedFlag& v) {
  if (u.k() != v.k()) throw Error(ErrorKind::LengthMismatch, "flags of different length");
  return flag_orientation(g, u) == flag_orientation(g, v);
}

std::vector<ConnectedFlag> enumerate_connected_flags(const PointedGraph& g, int k) {
  if (k < 1 || k > g.n()) throw Error(ErrorKind::BadK, "k must lie in 1..n");
  std::vector<ConnectedFlag> out;
  ConnectedFlag cur;
  std::function<void(VertexSet)> rec = [&](VertexSet prefix) {
    const int placed = cur.k();
    const VertexSet rest = g.all() & ~prefix;
    if (placed == k - 1) {
      if (rest && induced_connected(g, rest)) {
        cur.chain.push_back(g.all());
        out.push_back(cur);
        cur.chain.pop_back();
      }
      return;
    }
    const int still_needed = k - placed - 1;  // parts after this one
    for (VertexSet a = rest; a; a = (a - 1) & rest) {
      if (a == rest || set_size(rest & ~a) < still_needed) continue;
      if (prefix == 0 && !contains(a, g.q())) continue;
      if (!induced_connected(g, a) || !induced_connected(g, prefix | a)) continue;
      cur.chain.push_back(prefix | a);
      rec(prefix | a);
      cur.chain.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), flag_less);
  return out;
}

int FlagBasis::find(const PartialOrientation& o) const {
  auto it = index.find(o);
  return it == index.end() ? -1 : it->second;
}

FlagBasis enumerate_minimal_flags(const PointedGraph& g, int k) {
  std::map<PartialOrientation, ConnectedFlag> best;
  for (auto& f : enumerate_connected_flags(g, k)) {
    auto o = flag_orientation(g, f);
    auto it = best.find(o);
    if (it == best.end())
      best.emplace(std::move(o), std::move(f));
    else if (flag_less(f, it->second))
      it->second = std::move(f);
  }
  FlagBasis basis;
  basis.k = k;
  for (auto& [o, f] : best) basis.flags.push_back(f);
  std::sort(basis.flags.begin(), basis.flags.end(), flag_less);
  for (int i = 0; i < basis.size(); ++i) basis.index.emplace(flag_orientation(g, basis.flags[i]), i);
  return basis;
}

ConnectedFlag drop_first(const PointedGraph& g, const ConnectedFlag& uc) {
  (void)g;
  if (uc.k() < 2) throw Error(ErrorKind::TooShort, "drop_first needs k >= 2");
  return ConnectedFlag{std::vector<VertexSet>(uc.chain.begin() + 1, uc.chain.end())};
}

ConnectedFlag drop_second(const PointedGraph& g, const ConnectedFlag& uc) {
  if (uc.k() < 3) throw Error(ErrorKind::TooShort, "drop_second needs k >= 3");
  const VertexSet u1 = uc.chain[0], u2 = uc.chain[1], u3 = uc.chain[2];
  ConnectedFlag out;
  out.chain.push_back(induced_connected(g, u3 & ~u1) ? u1 : (u1 | (u3 & ~u2)));
  out.chain.insert(out.chain.end(), uc.chain.begin() + 2, uc.chain.end());
  return out;
}

namespace {

void check_tails(const ConnectedFlag& w, const ConnectedFlag& v) {
  if (w.k() != v.k()) throw Error(ErrorKind::LengthMismatch, "flags of different length");
  if (w.k() < 2) throw Error(ErrorKind::TooShort, "kappa needs k >= 2");
  for (int i = 1; i < w.k(); ++i)
    if (w.chain[i] != v.chain[i]) throw Error(ErrorKind::TailMismatch, "W_i != V_i for some i >= 2");
}

Divisor entrywise_max(const Divisor& a, const Divisor& b) {
  Divisor r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

}  // namespace

Divisor kappa(const PointedGraph& g, const ConnectedFlag& w, const ConnectedFlag& v) {
  check_tails(w, v);
  return entrywise_max(boundary_divisor(g, w.chain[1] & ~w.chain[0], w.chain[0]),
                       boundary_divisor(g, v.chain[1] & ~v.chain[0], v.chain[0]));
}

Divisor kappa_alternate(const PointedGraph& g, const ConnectedFlag& w, const ConnectedFlag& v) {
  check_tails(w, v);
  const VertexSet w1 = w.chain[0], v1 = v.chain[0], w2 = w.chain[1];
  const VertexSet outer = w2 & ~(w1 | v1);
  Divisor r = entrywise_max(boundary_divisor(g, outer, w1), boundary_divisor(g, outer, v1));
  r = add(r, boundary_divisor(g, v1 & ~w1, w1));
  return add(r, boundary_divisor(g, w1 & ~v1, v1));
}

Contraction contract(const PointedGraph& g, const ConnectedFlag& uc) {
  const auto parts = uc.parts();
  Contraction c;
  c.vertex_map.assign(g.n(), -1);
  for (std::size_t l = 0; l < parts.size(); ++l)
    for (int v : members(parts[l])) c.vertex_map[v] = static_cast<int>(l);
  std::vector<Edge> edges;
  for (int a = 0; a < uc.k(); ++a)
    for (int b = a + 1; b < uc.k(); ++b) {
      int d = edge_count_between(g, parts[a], parts[b]);
      if (d > 0) edges.push_back({a, b, d});
    }
  c.graph = build_graph(uc.k(), edges, 0);
  return c;
}

Divisor pushforward_divisor(const std::vector<int>& vertex_map, const Divisor& d, int target_size) {
  Divisor r(target_size, 0);
  for (std::size_t v = 0; v < d.size(); ++v) r[vertex_map[v]] += d[v];
  return r;
}

ConnectedFlag pullback_flag(const PointedGraph& g, const std::vector<int>& vertex_map,
                            const ConnectedFlag& vc_prime) {
  std::vector<VertexSet> chain;
  for (VertexSet s : vc_prime.chain) {
    VertexSet pre = 0;
    for (int v = 0; v < g.n(); ++v)
      if (contains(s, vertex_map[v])) pre |= singleton(v);
    chain.push_back(pre);
  }
  try {
    return validate_flag(g, chain);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAFlag, std::string("pullback is not a connected flag: ") + e.what());
  }
}

PartialOrientation reversal_orientation(const PointedGraph& g, const ConnectedFlag& uc, int j) {
  if (j < 0 || j > uc.k()) throw Error(ErrorKind::BadPartIndex, "part index out of range", j);
  PartialOrientation o = flag_orientation(g, uc);
  const auto& pairs = g.adjacent_pairs();
  for (int step = 1; step <= j; ++step) {
    const VertexSet a = uc.part(step - 1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [u, v] = pairs[i];
      if (contains(a, u) != contains(a, v)) o.state[i] = static_cast<EdgeState>(-static_cast<int>(o.state[i]));
    }
  }
  return o;
}

namespace {

// sgn of the permutation that rearranges `from` into `to` (same elements).
int permutation_sign(const std::vector<VertexSet>& from, const std::vector<VertexSet>& to) {
  std::vector<int> p;
  for (VertexSet x : from) p.push_back(static_cast<int>(std::find(to.begin(), to.end(), x) - to.begin()));
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

}  // namespace

FlagCalculus::FlagCalculus(PointedGraph g) : g_(std::move(g)) {
  bases_.resize(g_.n() + 1);
  for (int k = 1; k <= g_.n(); ++k) bases_[k] = enumerate_minimal_flags(g_, k);
}

const FlagBasis& FlagCalculus::basis(int k) const {
  if (k < 1 || k > g_.n()) throw Error(ErrorKind::BadK, "k must lie in 1..n");
  return bases_[k];
}

int FlagCalculus::index_of(const ConnectedFlag& uc) const {
  const FlagBasis& b = basis(uc.k());
  int i = b.find(flag_orientation(g_, uc));
  if (i < 0 || b.flags[i] != uc) throw Error(ErrorKind::NotMinimalRep, "flag is not a minimal representative");
  return i;
}

const ConnectedFlag& FlagCalculus::representative(const ConnectedFlag& uc) const {
  const FlagBasis& b = basis(uc.k());
  int i = b.find(flag_orientation(g_, uc));
  if (i < 0) throw Error(ErrorKind::NotAFlag, "no connected flag with this orientation");
  return b.flags[i];
}

// Realigns a merged partition with an acyclic orientation of its parts: the
// indegree divisor minus one is reduced at the part holding q, which yields a
// maximal reduced divisor; Dhar's burn order of that divisor is the part order.
int FlagCalculus::canonical_merge(const std::vector<VertexSet>& parts,
                                  const std::vector<std::pair<int, int>>& arcs) const {
  const int kk = static_cast<int>(parts.size());
  int qp = 0;
  while (!contains(parts[qp], g_.q())) ++qp;
  std::vector<Edge> edges;
  for (int a = 0; a < kk; ++a)
    for (int b = a + 1; b < kk; ++b) {
      int d = edge_count_between(g_, parts[a], parts[b]);
      if (d > 0) edges.push_back({a, b, d});
    }
  const PointedGraph h = build_graph(kk, edges, qp);
  // Two parts fused into one can contribute the same arc twice.
  const std::set<std::pair<int, int>> distinct(arcs.begin(), arcs.end());
  Divisor d(kk, -1);
  for (auto [a, b] : distinct) d[b] += h.mult(a, b);
  const Divisor e = q_reduce(h, qp, d);
  const std::vector<int> order = dhar_burn_order(h, qp, e);
  if (static_cast<int>(order.size()) != kk)
    throw Error(ErrorKind::NotMinimalRep, "merged orientation did not realign to a flag");
  std::vector<VertexSet> ordered;
  for (int i : order) ordered.push_back(parts[i]);
  const int idx = basis(kk).find(orientation_from_parts(g_, ordered));
  if (idx < 0) throw Error(ErrorKind::NotMinimalRep, "merged flag has no representative");
  return idx;
}

MergeSets FlagCalculus::compute_merges(const ConnectedFlag& uc) const {
  const int k = uc.k();
  const auto parts = uc.parts();
  std::vector<std::vector<int>> adj(k, std::vector<int>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b) adj[a][b] = edge_count_between(g_, parts[a], parts[b]);

  MergeSets out;
  for (int stage = 0; stage < k; ++stage) {
    // o_stage orients along the cyclic shift A_{stage+1}, ..., A_k, A_1, ..., A_stage.
    std::vector<int> pos(k);
    for (int t = 0; t < k; ++t) pos[(stage + t) % k] = t;
    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (adj[a][b] > 0 && pos[a] < pos[b]) arcs.emplace_back(a, b);

    for (auto [tail, head] : arcs) {
      if (stage > 0 && (head != stage - 1 || tail < head)) continue;
      // Mergeable iff the arc is the only directed path tail -> head.
      std::vector<char> reach(k, 0);
      std::vector<int> stack{tail};
      reach[tail] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto [c, d] : arcs)
          if (c == x && !(c == tail && d == head) && !reach[d]) {
            reach[d] = 1;
            stack.push_back(d);
          }
      }
      if (reach[head]) continue;

      std::vector<int> rest;
      for (int l = 0; l < k; ++l)
        if (l != tail && l != head) rest.push_back(l);
      std::vector<VertexSet> merged{parts[tail] | parts[head]};
      std::vector<int> to_new(k, 0);
      for (std::size_t t = 0; t < rest.size(); ++t) {
        merged.push_back(parts[rest[t]]);
        to_new[rest[t]] = static_cast<int>(t) + 1;
      }
      std::vector<std::pair<int, int>> merged_arcs;
      for (auto [c, d] : arcs)
        if (to_new[c] != to_new[d]) merged_arcs.emplace_back(to_new[c], to_new[d]);

      MergeTerm term;
      term.target = canonical_merge(merged, merged_arcs);
      term.tail = tail;
      term.head = head;
      term.stage = stage;
      std::vector<VertexSet> alpha_u{parts[tail], parts[head]};
      for (int l : rest) alpha_u.push_back(parts[l]);
      const ConnectedFlag& w = basis(k - 1).flags[term.target];
      term.sign = permutation_sign(parts, alpha_u) * permutation_sign(w.parts(), merged);
      term.theta = boundary_divisor(g_, parts[head], parts[tail]);
      if (stage == 0) out.i_set.push_back(term);
      out.b_set.push_back(std::move(term));
    }
  }
  return out;
}

MergeSets FlagCalculus::merge_sets(const ConnectedFlag& uc) const {
  index_of(uc);
  if (uc.k() <= 2) return {};
  return compute_merges(uc);
}

std::vector<MergeTerm> FlagCalculus::boundary_terms(const ConnectedFlag& uc, Variant variant) const {
  index_of(uc);
  if (uc.k() < 2) return {};
  MergeSets m = compute_merges(uc);
  return variant == Variant::Binomial ? m.b_set : m.i_set;
}

MergeTerm FlagCalculus::find_term(const ConnectedFlag& uc, const ConnectedFlag& wc) const {
  if (wc.k() != uc.k() - 1) throw Error(ErrorKind::NotMergedFrom, "length mismatch");
  const int target = index_of(wc);
  for (auto& t : merge_sets(uc).b_set)
    if (t.target == target) return t;
  throw Error(ErrorKind::NotMergedFrom, "flag is not in B(U)");
}

int FlagCalculus::incidence_sign(const ConnectedFlag& uc, const ConnectedFlag& wc) const {
  return find_term(uc, wc).sign;
}

Divisor FlagCalculus::theta(const ConnectedFlag& uc, const ConnectedFlag& wc) const {
  return find_term(uc, wc).theta;
}

}  // namespace toppling
