#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace toppling {

// Element of Z/p.  Carries its modulus so arithmetic needs no global state.
class Fp {
 public:
  Fp() = default;
  Fp(long value, std::uint32_t p) : p_(p) {
    long r = value % static_cast<long>(p);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + static_cast<long>(p) : r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  // Representative in (-p/2, p/2], used for printing.
  long signed_value() const { return v_ > p_ / 2 ? static_cast<long>(v_) - p_ : static_cast<long>(v_); }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b) { return Fp(static_cast<long>(a.v_) + b.v_, a.p_); }
  friend Fp operator-(Fp a, Fp b) { return Fp(static_cast<long>(a.v_) - b.v_, a.p_); }
  friend Fp operator*(Fp a, Fp b) {
    return Fp(static_cast<long>(static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(-static_cast<long>(v_), p_); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

 private:
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 32003;
};

inline Fp Fp::inverse() const {
  long a = v_, m = p_, x0 = 1, x1 = 0;
  while (m) {
    long t = a / m;
    a -= t * m;
    std::swap(a, m);
    x0 -= t * x1;
    std::swap(x0, x1);
  }
  return Fp(x0, p_);
}

using Rational = mpq_class;

struct PrimeField {
  using Scalar = Fp;
  std::uint32_t p = 32003;
  Scalar from_int(long v) const { return Fp(v, p); }
  std::string name() const { return "prime(" + std::to_string(p) + ")"; }
};

struct RationalField {
  using Scalar = Rational;
  Scalar from_int(long v) const { return Rational(v); }
  std::string name() const { return "rational"; }
};

inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline Fp inverse(const Fp& a) { return a.inverse(); }
inline Rational inverse(const Rational& a) { return Rational(1) / a; }
inline std::string to_string(const Fp& a) { return std::to_string(a.signed_value()); }
inline std::string to_string(const Rational& a) {
  Rational c(a);
  c.canonicalize();
  return c.get_str();
}
inline bool is_one(const Fp& a) { return a.value() == 1; }
inline bool is_one(const Rational& a) { return a == 1; }
inline bool is_minus_one(const Fp& a) { return a.signed_value() == -1; }
inline bool is_minus_one(const Rational& a) { return a == -1; }

}  // namespace toppling
