#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace toppling {

constexpr int kMaxVertices = 16;

// Divisors, monomial exponents and multidegrees all share this representation.
using Divisor = std::vector<int>;

struct Monomial {
  std::array<std::int16_t, kMaxVertices> e{};

  static Monomial from_divisor(const Divisor& d);
  Divisor to_divisor(int n) const;

  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator+(const Monomial& o) const;
  // Caller guarantees o divides *this.
  Monomial operator-(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
  // Storage order only (lexicographic on the raw array), not a term order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

Monomial lcm(const Monomial& a, const Monomial& b);

}  // namespace toppling
