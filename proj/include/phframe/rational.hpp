#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace phframe {

// Exact rational scalar. GMP keeps numerator and denominator coprime with a
// positive denominator after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

/// Canonical "p/q" rendering, q > 0 always written out.
std::string to_string(const Rat& x);

/// Accepts "p/q", "p", and an optional leading sign. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// Gaussian rational re + im*i with re, im in Q.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() : re(0), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}  // NOLINT: Q -> Q(i) promotion is implicit
  GaussRat(long r) : re(r), im(0) {}        // NOLINT
  GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

  static GaussRat imag_unit() { return {Rat(0), Rat(1)}; }

  bool is_real() const { return sgn(im) == 0; }
  GaussRat conj() const { return {re, -im}; }
  Rat norm() const { return Rat(re * re + im * im); }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return {Rat(-a.re), Rat(-a.im)}; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline bool is_zero(const GaussRat& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }
inline GaussRat conj(const GaussRat& x) { return x.conj(); }
inline Rat conj(const Rat& x) { return x; }

std::string to_string(const GaussRat& x);
std::ostream& operator<<(std::ostream& os, const GaussRat& x);

}  // namespace phframe
