#pragma once

#include "phframe/curve.hpp"
#include "phframe/quaternion.hpp"

#include <array>
#include <optional>
#include <vector>

namespace phframe {

/// num / den over Q with gcd(num, den) = 1 and monic den.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(QPoly num, QPoly den);  // NOLINT: normalizes
  static RationalFunction polynomial(QPoly p) { return {std::move(p), QPoly::constant(Rat(1))}; }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction derivative() const;
  /// Throws PoleError at a zero of den.
  Rat operator()(const Rat& t) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  QPoly num_;
  QPoly den_ = QPoly::constant(Rat(1));
};

using VecRational = Vec3<RationalFunction>;

/// Speed sigma with |r'|^2 = sigma^2, when it is rational. sigma has a
/// positive leading numerator coefficient; constant curves give sigma = 0.
std::optional<RationalFunction> ph_check(const PHCurve& r);

/// r' / sigma. Throws DegenerateError if r is not PH or is constant.
VecRational tangent_indicatrix(const PHCurve& r);

/// Columns A i A*, A j A*, A k A* at t0, each divided by (A A*)(t0).
/// Throws DegenerateError when (A A*)(t0) = 0.
std::array<Vec3Q, 3> euler_rodrigues_frame(const QuatPoly& a, const Rat& t0);

/// Curve with osculating planes u . x = f, u = v x v', v = A i A*. Throws
/// DegenerateError when det[u, u', u''] vanishes identically.
PHCurve curve_from_osculating(const QuatPoly& a, const RationalFunction& f);

/// Exact evaluation at each parameter. Throws PoleError naming the offending t.
std::vector<Vec3Q> sample_curve(const PHCurve& r, const std::vector<Rat>& t_values);

/// Component derivative r' as rational functions.
VecRational hodograph(const PHCurve& r);
/// Combines three rational components over their least common denominator.
PHCurve to_curve(const VecRational& v);

}  // namespace phframe
