#include "phframe/quaternion.hpp"

#include "phframe/errors.hpp"

#include <algorithm>

namespace phframe {

QuatPoly quat_poly(const std::vector<Quat>& coeffs) {
  std::vector<Rat> w, x, y, z;
  for (const auto& q : coeffs) {
    w.push_back(q.w);
    x.push_back(q.x);
    y.push_back(q.y);
    z.push_back(q.z);
  }
  return {QPoly(std::move(w)), QPoly(std::move(x)), QPoly(std::move(y)), QPoly(std::move(z))};
}

QuatPoly quat_poly(const Quat& q) { return quat_poly(std::vector<Quat>{q}); }

Quat eval(const QuatPoly& a, const Rat& t) { return {a.w(t), a.x(t), a.y(t), a.z(t)}; }

Vec3Q eval(const VecPoly& v, const Rat& t) { return {v.x(t), v.y(t), v.z(t)}; }

QuatPoly scale(const QPoly& s, const QuatPoly& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }

VecPoly scale(const QPoly& s, const VecPoly& v) { return {s * v.x, s * v.y, s * v.z}; }

VecPoly derivative(const VecPoly& v) { return {v.x.derivative(), v.y.derivative(), v.z.derivative()}; }

std::size_t degree(const QuatPoly& a) {
  long d = std::max({a.w.degree_or(0), a.x.degree_or(0), a.y.degree_or(0), a.z.degree_or(0)});
  return static_cast<std::size_t>(d);
}

long degree_or(const VecPoly& v, long zero_value) {
  if (is_zero(v)) return zero_value;
  return std::max({v.x.degree_or(-1), v.y.degree_or(-1), v.z.degree_or(-1)});
}

QPoly real_content(const QuatPoly& a) { return gcd(gcd(a.w, a.x), gcd(a.y, a.z)); }

QPoly real_content(const VecPoly& v) { return gcd(gcd(v.x, v.y), v.z); }

VecPoly axis_image(const QuatPoly& a, int axis) {
  Vec3<QPoly> e;
  e[static_cast<std::size_t>(axis)] = QPoly::constant(Rat(1));
  return (a * QuatPoly::vector(e) * a.conj()).vec();
}

MotionPoly MotionPoly::normalized() const {
  QPoly g = gcd(real_content(primal), real_content(dual));
  if (g.is_zero() || g.is_constant()) return *this;
  auto div = [&](const QuatPoly& q) {
    return QuatPoly{exact_div(q.w, g), exact_div(q.x, g), exact_div(q.y, g), exact_div(q.z, g)};
  };
  return {div(primal), div(dual)};
}

MotionPoly framing_motion(const QPoly& alpha, const VecPoly& b, const QuatPoly& a) {
  return {scale(alpha, a), QuatPoly::vector(b) * a};
}

bool study_check(const MotionPoly& c) {
  return is_zero(c.primal * c.dual.conj() + c.dual * c.primal.conj());
}

VecRatPoly act_on_point(const MotionPoly& c, const Vec3Q& point) {
  if (is_zero(c.primal)) throw DegenerateError("motion polynomial has zero primal part");
  if (!study_check(c)) throw StudyConditionError("motion polynomial violates the Study condition");
  const QuatPoly& p = c.primal;
  const QuatPoly& d = c.dual;
  const QuatPoly x = quat_poly(Quat{Rat(0), point.x, point.y, point.z});
  // Dual part of (P - eps D)(1 + eps x)(P* + eps D*).
  QuatPoly moved = p * x * p.conj() + p * d.conj() - d * p.conj();
  return {moved.vec(), quat_norm(p)};
}

std::pair<VecPoly, QPoly> act_on_vector(const QuatPoly& a, const Vec3Q& v) {
  const QuatPoly x = quat_poly(Quat{Rat(0), v.x, v.y, v.z});
  return {(a * x * a.conj()).vec(), quat_norm(a)};
}

std::pair<CPoly, CPoly> split_complex(const QuatPoly& a) {
  auto combine = [](const QPoly& re, const QPoly& im) {
    std::size_t n = std::max(re.size(), im.size());
    std::vector<GaussRat> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = GaussRat(re[k], im[k]);
    return CPoly(std::move(c));
  };
  // w + x i + (y + z i) j, since i j = k.
  return {combine(a.w, a.x), combine(a.y, a.z)};
}

QuatPoly join_complex(const CPoly& a1, const CPoly& a2) {
  return {real_part(a1), imag_part(a1), real_part(a2), imag_part(a2)};
}

CPoly subalgebra_right_factor(const QuatPoly& a) {
  auto [a1, a2] = split_complex(a);
  // A = A' R with R in C[t] means A1 = A1' R and A2 = A2' conj(R), because
  // j c = conj(c) j for c in the 1,i subalgebra.
  return gcd(a1, conj(a2));
}

bool is_reduced_wrt_i(const QuatPoly& a) {
  if (is_zero(a)) return false;
  return real_content(a).is_constant() && subalgebra_right_factor(a).is_constant();
}

QuatPoly reduce_wrt_i(const QuatPoly& a) {
  if (is_zero(a)) throw DegenerateError("cannot reduce the zero quaternion polynomial");
  QuatPoly r = a;
  QPoly g = real_content(r);
  if (!g.is_constant()) r = {exact_div(r.w, g), exact_div(r.x, g), exact_div(r.y, g), exact_div(r.z, g)};
  auto [a1, a2] = split_complex(r);
  CPoly h = gcd(a1, conj(a2));
  if (h.is_constant()) return r;
  return join_complex(exact_div(a1, h), exact_div(a2, conj(h)));
}

std::ostream& operator<<(std::ostream& os, const QuatPoly& a) {
  return os << "[" << a.w << "] + [" << a.x << "]i + [" << a.y << "]j + [" << a.z << "]k";
}

}  // namespace phframe
