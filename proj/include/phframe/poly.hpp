#pragma once

#include "phframe/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace phframe {

/// Dense univariate polynomial with ascending coefficients. The zero
/// polynomial stores no coefficients; every other value has a nonzero last
/// coefficient.
template <class S>
class Poly {
 public:
  using Scalar = S;

  Poly() = default;
  Poly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const S& s) { return Poly(std::vector<S>{s}); }
  static Poly monomial(const S& s, std::size_t degree) {
    std::vector<S> c(degree + 1, S(0));
    c[degree] = s;
    return Poly(std::move(c));
  }
  /// The polynomial t.
  static Poly t() { return monomial(S(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree; empty for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  /// Degree with the zero polynomial mapped to -1. Only for bound arithmetic.
  long degree_or(long zero_value) const { return c_.empty() ? zero_value : static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  const std::vector<S>& coeffs() const { return c_; }
  /// Coefficient of t^k, zero beyond the stored range.
  S operator[](std::size_t k) const { return k < c_.size() ? c_[k] : S(0); }
  const S& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class X>
  X eval(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += X(*it);
    }
    return acc;
  }
  S operator()(const S& x) const { return eval<S>(x); }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * S(static_cast<long>(k));
    return Poly(std::move(d));
  }

  /// Antiderivative with zero constant term.
  Poly integral() const {
    if (c_.empty()) return {};
    std::vector<S> d(c_.size() + 1, S(0));
    for (std::size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k] / S(static_cast<long>(k + 1));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (c_.empty()) return {};
    S inv = S(1) / c_.back();
    return *this * inv;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const S& s) {
    if (phframe::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const S& s) { return a *= s; }
  friend Poly operator*(const S& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (phframe::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Multiplication by t^k.
  Poly shifted(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<S> r(k, S(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && phframe::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

using QPoly = Poly<Rat>;
using CPoly = Poly<GaussRat>;

template <class S>
struct DivMod {
  Poly<S> quotient;
  Poly<S> remainder;
};

/// Euclidean division. Throws std::domain_error when the divisor is zero.
template <class S>
DivMod<S> divmod(const Poly<S>& p, const Poly<S>& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<S> rem = p.coeffs();
  const std::size_t dn = d.size();
  if (rem.size() < dn) return {Poly<S>{}, p};
  std::vector<S> quo(rem.size() - dn + 1, S(0));
  const S inv_lead = S(1) / d.lead();
  for (std::size_t step = quo.size(); step-- > 0;) {
    const std::size_t k = step + dn - 1;
    S q = rem[k] * inv_lead;
    if (!phframe::is_zero(q)) {
      for (std::size_t j = 0; j < dn; ++j) rem[step + j] -= q * d.coeffs()[j];
    }
    quo[step] = q;
  }
  rem.resize(dn - 1);
  return {Poly<S>(std::move(quo)), Poly<S>(std::move(rem))};
}

template <class S>
Poly<S> operator%(const Poly<S>& p, const Poly<S>& d) {
  return divmod(p, d).remainder;
}

/// Exact quotient; throws std::domain_error if d does not divide p.
template <class S>
Poly<S> exact_div(const Poly<S>& p, const Poly<S>& d) {
  auto qr = divmod(p, d);
  if (!qr.remainder.is_zero()) throw std::domain_error("inexact polynomial division");
  return qr.quotient;
}

template <class S>
bool divides(const Poly<S>& d, const Poly<S>& p) {
  return divmod(p, d).remainder.is_zero();
}

/// Monic gcd; gcd(0, 0) = 0.
template <class S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  while (!b.is_zero()) {
    Poly<S> r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class S>
Poly<S> lcm(const Poly<S>& a, const Poly<S>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_div(a * b, gcd(a, b)).monic();
}

template <class S>
Poly<S> pow(Poly<S> base, unsigned e) {
  Poly<S> r = Poly<S>::constant(S(1));
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

/// Coefficientwise complex conjugate (t stays real).
inline CPoly conj(const CPoly& p) {
  std::vector<GaussRat> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.push_back(x.conj());
  return CPoly(std::move(c));
}

inline CPoly to_complex(const QPoly& p) {
  std::vector<GaussRat> c(p.coeffs().begin(), p.coeffs().end());
  return CPoly(std::move(c));
}
inline QPoly real_part(const CPoly& p) {
  std::vector<Rat> c;
  for (const auto& x : p.coeffs()) c.push_back(x.re);
  return QPoly(std::move(c));
}
inline QPoly imag_part(const CPoly& p) {
  std::vector<Rat> c;
  for (const auto& x : p.coeffs()) c.push_back(x.im);
  return QPoly(std::move(c));
}
inline bool is_real(const CPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const GaussRat& x) { return x.is_real(); });
}

template <class S>
bool is_zero(const Poly<S>& p) {
  return p.is_zero();
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Poly<S>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (phframe::is_zero(p.coeffs()[k])) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p.coeffs()[k] << ")";
    if (k >= 1) os << "*t";
    if (k >= 2) os << "^" << k;
  }
  return os;
}

}  // namespace phframe
