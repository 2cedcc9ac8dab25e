#include "phframe/curve.hpp"

#include "phframe/errors.hpp"

namespace phframe {

PHCurve PHCurve::reduced() const {
  if (den.is_zero()) throw DegenerateError("curve has zero denominator");
  QPoly g = gcd(real_content(num), den);
  PHCurve out = *this;
  out.num = {exact_div(num.x, g), exact_div(num.y, g), exact_div(num.z, g)};
  out.den = exact_div(den, g);
  Rat inv = 1 / out.den.lead();
  out.num = inv * out.num;
  out.den = out.den * inv;
  return out;
}

bool PHCurve::is_constant() const {
  PHCurve r = reduced();
  return r.den.is_constant() && r.num.x.is_constant() && r.num.y.is_constant() && r.num.z.is_constant();
}

Vec3Q PHCurve::at(const Rat& t) const {
  Rat d = den(t);
  if (is_zero(d)) throw PoleError("curve has a pole at t = " + t.get_str());
  Vec3Q n = eval(num, t);
  return {Rat(n.x / d), Rat(n.y / d), Rat(n.z / d)};
}

bool same_curve(const PHCurve& a, const PHCurve& b) {
  return scale(b.den, a.num) == scale(a.den, b.num);
}

}  // namespace phframe
