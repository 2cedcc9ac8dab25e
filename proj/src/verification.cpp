#include "phframe/verification.hpp"

#include "phframe/errors.hpp"
#include "phframe/poly_algo.hpp"

namespace phframe {

RationalFunction::RationalFunction(QPoly num, QPoly den) {
  if (den.is_zero()) throw DegenerateError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = QPoly::constant(Rat(1));
    return;
  }
  QPoly g = gcd(num, den);
  num_ = exact_div(num, g);
  den_ = exact_div(den, g);
  Rat inv = 1 / den_.lead();
  num_ *= inv;
  den_ *= inv;
}

RationalFunction RationalFunction::derivative() const {
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

Rat RationalFunction::operator()(const Rat& t) const {
  Rat d = den_(t);
  if (phframe::is_zero(d)) throw PoleError("rational function has a pole at t = " + t.get_str());
  return num_(t) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DegenerateError("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

VecRational hodograph(const PHCurve& r) {
  VecRational out;
  for (std::size_t c = 0; c < 3; ++c) out[c] = RationalFunction(r.num[c], r.den).derivative();
  return out;
}

PHCurve to_curve(const VecRational& v) {
  QPoly den = lcm(lcm(v.x.den(), v.y.den()), v.z.den());
  PHCurve out;
  for (std::size_t c = 0; c < 3; ++c) out.num[c] = v[c].num() * exact_div(den, v[c].den());
  out.den = den;
  return out.reduced();
}

std::optional<RationalFunction> ph_check(const PHCurve& r) {
  const QPoly& d = r.den;
  const QPoly dd = d.derivative();
  QPoly speed_sq_num;
  for (std::size_t c = 0; c < 3; ++c) {
    QPoly comp = r.num[c].derivative() * d - r.num[c] * dd;
    speed_sq_num += comp * comp;
  }
  RationalFunction speed_sq(speed_sq_num, pow(d, 4));
  if (speed_sq.is_zero()) return RationalFunction{};
  auto num_root = perfect_square_test(speed_sq.num());
  if (!num_root) return std::nullopt;
  auto den_root = perfect_square_test(speed_sq.den());
  if (!den_root) return std::nullopt;
  return RationalFunction(*num_root, *den_root);
}

VecRational tangent_indicatrix(const PHCurve& r) {
  auto sigma = ph_check(r);
  if (!sigma) throw DegenerateError("curve is not a PH curve");
  if (sigma->is_zero()) throw DegenerateError("constant curve has no tangent indicatrix");
  VecRational h = hodograph(r);
  return {h.x / *sigma, h.y / *sigma, h.z / *sigma};
}

std::array<Vec3Q, 3> euler_rodrigues_frame(const QuatPoly& a, const Rat& t0) {
  const Quat q = eval(a, t0);
  const Rat n = norm(q);
  if (is_zero(n)) throw DegenerateError("A(t0) = 0, no frame at t = " + t0.get_str());
  std::array<Vec3Q, 3> frame;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    Vec3Q e;
    e[axis] = 1;
    Vec3Q img = (q * Quat::vector(e) * q.conj()).vec();
    frame[axis] = {Rat(img.x / n), Rat(img.y / n), Rat(img.z / n)};
  }
  return frame;
}

PHCurve curve_from_osculating(const QuatPoly& a, const RationalFunction& f) {
  const VecPoly v = image_of_i(a);
  const VecPoly u = cross(v, derivative(v));
  const VecPoly du = derivative(u);
  const VecPoly ddu = derivative(du);
  const QPoly det = det3(u, du, ddu);
  if (det.is_zero()) throw DegenerateError("det[u, u', u''] vanishes identically");
  const VecPoly c0 = cross(du, ddu);
  const VecPoly c1 = cross(ddu, u);
  const VecPoly c2 = cross(u, du);
  const RationalFunction df = f.derivative();
  const RationalFunction ddf = df.derivative();
  const RationalFunction inv_det(QPoly::constant(Rat(1)), det);
  VecRational r;
  for (std::size_t c = 0; c < 3; ++c) {
    r[c] = (f * RationalFunction::polynomial(c0[c]) + df * RationalFunction::polynomial(c1[c]) +
            ddf * RationalFunction::polynomial(c2[c])) *
           inv_det;
  }
  PHCurve out = to_curve(r);
  out.rotation = a;
  return out;
}

std::vector<Vec3Q> sample_curve(const PHCurve& r, const std::vector<Rat>& t_values) {
  std::vector<Vec3Q> out;
  out.reserve(t_values.size());
  for (const auto& t : t_values) out.push_back(r.at(t));
  return out;
}

}  // namespace phframe
