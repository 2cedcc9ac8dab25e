#pragma once

#include "phframe/quaternion.hpp"

#include <optional>

namespace phframe {

/// Rational space curve num / den. Reduced form: gcd(num.x, num.y, num.z, den)
/// is constant and den is monic.
struct PHCurve {
  VecPoly num;
  QPoly den = QPoly::constant(Rat(1));
  /// Translation part b and rotation A of the framing motion that produced
  /// the curve, when known.
  std::optional<VecPoly> b;
  std::optional<QuatPoly> rotation;

  PHCurve reduced() const;
  bool is_constant() const;
  /// Throws PoleError when den(t) = 0.
  Vec3Q at(const Rat& t) const;
};

/// Equality as vector-valued rational functions (cross-multiplied).
bool same_curve(const PHCurve& a, const PHCurve& b);

}  // namespace phframe
