#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toppling/field.hpp"
#include "toppling/graph.hpp"

namespace toppling {

template <class S>
class Polynomial {
 public:
  using Terms = std::map<Monomial, S>;

  Polynomial() = default;
  Polynomial(const Monomial& m, const S& c) { add_term(m, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // True when some term has degree 0 (a unit, for homogeneous entries).
  bool has_constant_term() const { return terms_.count(Monomial{}) > 0; }

  void add_term(const Monomial& m, const S& c) {
    if (toppling::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (toppling::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
  }
  Polynomial scaled(const Monomial& m, const S& c) const {
    Polynomial r;
    for (const auto& [mm, cc] : terms_) r.add_term(mm + m, cc * c);
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Leading term under a term order; the polynomial must be nonzero.
  std::pair<Monomial, S> leading(const TermOrder& order) const {
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
      if (order.less(best->first, it->first)) best = it;
    return *best;
  }

 private:
  Terms terms_;
};

// `c*x1^a1*x2^a2` syntax with 1-based variable names; leading minus signs folded.
inline std::string monomial_to_string(const Monomial& m, int n) {
  std::string out;
  for (int v = 0; v < n; ++v) {
    if (m.e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(v + 1);
    if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
  }
  return out.empty() ? "1" : out;
}

// Terms are listed in descending term order when an order is supplied.
template <class S>
std::string polynomial_to_string(const Polynomial<S>& p, int n, const TermOrder* order = nullptr) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, S>> terms(p.terms().begin(), p.terms().end());
  if (order)
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const auto& a, const auto& b) { return order->less(b.first, a.first); });
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string coeff = to_string(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (m.is_one())
      out += coeff;
    else
      out += (coeff == "1" ? "" : coeff + "*") + monomial_to_string(m, n);
  }
  return out;
}

}  // namespace toppling
