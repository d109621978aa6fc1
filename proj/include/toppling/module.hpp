#pragma once

#include <map>
#include <vector>

#include "toppling/polynomial.hpp"

namespace toppling {

// x^exp [basis]
struct ModuleMonomial {
  int basis = 0;
  Monomial exp;

  friend bool operator==(const ModuleMonomial& a, const ModuleMonomial& b) {
    return a.basis == b.basis && a.exp == b.exp;
  }
};

// Order pulled back along a list of leading terms: x^a[i] is compared via
// x^(a + shift[i]) in the term order, then via chain[i] (the positions of i
// and of the basis elements its leading term lives on, oldest first), a
// smaller position ranking higher.  The ring itself is the rank-one case
// with zero shift and empty chain.
class ModuleOrder {
 public:
  ModuleOrder(TermOrder order, std::vector<Monomial> shift, std::vector<std::vector<int>> chain)
      : order_(std::move(order)), shift_(std::move(shift)), chain_(std::move(chain)) {}

  static ModuleOrder for_ring(const TermOrder& order) { return ModuleOrder(order, {Monomial{}}, {{}}); }

  int rank() const { return static_cast<int>(shift_.size()); }
  const TermOrder& term_order() const { return order_; }
  const Monomial& shift(int i) const { return shift_[i]; }
  const std::vector<int>& chain(int i) const { return chain_[i]; }

  int compare(const ModuleMonomial& a, const ModuleMonomial& b) const {
    if (a.basis == b.basis) return order_.compare(a.exp, b.exp);
    int c = order_.compare(a.exp + shift_[a.basis], b.exp + shift_[b.basis]);
    if (c != 0) return c;
    const auto& ca = chain_[a.basis];
    const auto& cb = chain_[b.basis];
    for (std::size_t i = 0; i < ca.size() && i < cb.size(); ++i)
      if (ca[i] != cb[i]) return ca[i] < cb[i] ? 1 : -1;
    return 0;
  }

  struct Greater {
    const ModuleOrder* order;
    bool operator()(const ModuleMonomial& a, const ModuleMonomial& b) const { return order->compare(a, b) > 0; }
  };

 private:
  TermOrder order_;
  std::vector<Monomial> shift_;
  std::vector<std::vector<int>> chain_;
};

// Element of a free module, terms kept in descending module order so the
// leading term is the first one.
template <class S>
class ModuleElement {
 public:
  using Terms = std::map<ModuleMonomial, S, ModuleOrder::Greater>;

  explicit ModuleElement(const ModuleOrder* order) : order_(order), terms_(ModuleOrder::Greater{order}) {}

  static ModuleElement from_polynomial(const ModuleOrder* ring_order, const Polynomial<S>& p) {
    ModuleElement e(ring_order);
    for (const auto& [m, c] : p.terms()) e.add_term({0, m}, c);
    return e;
  }

  const ModuleOrder* order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const ModuleMonomial& lead() const { return terms_.begin()->first; }
  const S& lead_coeff() const { return terms_.begin()->second; }

  void add_term(const ModuleMonomial& m, const S& c) {
    if (toppling::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (toppling::is_zero(it->second)) terms_.erase(it);
    }
  }

  // this += c * x^shift * other
  void add_scaled(const ModuleElement& other, const Monomial& shift, const S& c) {
    for (const auto& [m, cc] : other.terms_) add_term({m.basis, m.exp + shift}, cc * c);
  }

  void pop_lead() { terms_.erase(terms_.begin()); }

  // Coefficient polynomial at one basis index.
  Polynomial<S> component(int basis) const {
    Polynomial<S> p;
    for (const auto& [m, c] : terms_)
      if (m.basis == basis) p.add_term(m.exp, c);
    return p;
  }

 private:
  const ModuleOrder* order_;
  Terms terms_;
};

template <class S>
struct DivisionResult {
  std::vector<Polynomial<S>> quotients;  // one per divisor
  ModuleElement<S> remainder;
};

// elem = Σ quotients[i]·basis[i] + remainder, no remainder term divisible by a
// leading term; the lowest-index divisor is always chosen.
template <class S>
DivisionResult<S> division_normal_form(const ModuleElement<S>& elem, const std::vector<ModuleElement<S>>& basis) {
  DivisionResult<S> out{std::vector<Polynomial<S>>(basis.size()), ModuleElement<S>(elem.order())};
  std::map<int, std::vector<std::size_t>> by_basis;
  for (std::size_t i = 0; i < basis.size(); ++i) by_basis[basis[i].lead().basis].push_back(i);
  ModuleElement<S> p = elem;
  while (!p.is_zero()) {
    const ModuleMonomial lm = p.lead();
    const S lc = p.lead_coeff();
    bool divided = false;
    auto it = by_basis.find(lm.basis);
    if (it != by_basis.end()) {
      for (std::size_t i : it->second) {
        const ModuleMonomial& gl = basis[i].lead();
        if (!gl.exp.divides(lm.exp)) continue;
        const Monomial factor = lm.exp - gl.exp;
        const S coef = lc / basis[i].lead_coeff();
        p.add_scaled(basis[i], factor, -coef);
        out.quotients[i].add_term(factor, coef);
        divided = true;
        break;
      }
    }
    if (!divided) {
      out.remainder.add_term(lm, lc);
      p.pop_lead();
    }
  }
  return out;
}

}  // namespace toppling
