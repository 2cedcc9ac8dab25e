#pragma once

#include "phframe/poly.hpp"

#include <array>
#include <utility>

namespace phframe {

/// 3-vector over a commutative ring (Q, Q(i), Q[t], ...).
template <class T>
struct Vec3 {
  T x{};
  T y{};
  T z{};

  T& operator[](std::size_t k) { return k == 0 ? x : (k == 1 ? y : z); }
  const T& operator[](std::size_t k) const { return k == 0 ? x : (k == 1 ? y : z); }

  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator-(const Vec3& a) { return {T(-a.x), T(-a.y), T(-a.z)}; }
  template <class S>
  friend Vec3 operator*(const S& s, const Vec3& a) {
    return {T(s * a.x), T(s * a.y), T(s * a.z)};
  }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  friend bool operator!=(const Vec3& a, const Vec3& b) { return !(a == b); }
};

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  T r = a.x * b.x;
  r += a.y * b.y;
  r += a.z * b.z;
  return r;
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {T(a.y * b.z - a.z * b.y), T(a.z * b.x - a.x * b.z), T(a.x * b.y - a.y * b.x)};
}

template <class T>
T det3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
  return dot(a, cross(b, c));
}

template <class T>
bool is_zero(const Vec3<T>& v) {
  using phframe::is_zero;
  return is_zero(v.x) && is_zero(v.y) && is_zero(v.z);
}

/// Quaternion w + x i + y j + z k over a commutative ring.
template <class T>
struct Quaternion {
  T w{};
  T x{};
  T y{};
  T z{};

  static Quaternion scalar(T s) { return {std::move(s), T{}, T{}, T{}}; }
  static Quaternion vector(const Vec3<T>& v) { return {T{}, v.x, v.y, v.z}; }

  Vec3<T> vec() const { return {x, y, z}; }
  Quaternion conj() const { return {w, T(-x), T(-y), T(-z)}; }
  bool is_vectorial() const {
    using phframe::is_zero;
    return is_zero(w);
  }

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) { return {T(-a.w), T(-a.x), T(-a.y), T(-a.z)}; }

  // Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {T(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z), T(a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y),
            T(a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x), T(a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w)};
  }
  template <class S>
  friend Quaternion operator*(const S& s, const Quaternion& a) {
    return {T(s * a.w), T(s * a.x), T(s * a.y), T(s * a.z)};
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

template <class T>
bool is_zero(const Quaternion<T>& q) {
  using phframe::is_zero;
  return is_zero(q.w) && is_zero(q.x) && is_zero(q.y) && is_zero(q.z);
}

/// a * conj(a) = w^2 + x^2 + y^2 + z^2.
template <class T>
T norm(const Quaternion<T>& a) {
  T r = a.w * a.w;
  r += a.x * a.x;
  r += a.y * a.y;
  r += a.z * a.z;
  return r;
}

using Quat = Quaternion<Rat>;
using QuatPoly = Quaternion<QPoly>;
using VecPoly = Vec3<QPoly>;
using Vec3Q = Vec3<Rat>;
using Vec3C = Vec3<GaussRat>;

inline QuatPoly quat_mul(const QuatPoly& a, const QuatPoly& b) { return a * b; }
inline QuatPoly quat_conj(const QuatPoly& a) { return a.conj(); }
/// Real polynomial a * conj(a).
inline QPoly quat_norm(const QuatPoly& a) { return norm(a); }

/// Quaternion polynomial from rational coefficient quaternions, ascending degree.
QuatPoly quat_poly(const std::vector<Quat>& coeffs);
/// Embeds a constant quaternion.
QuatPoly quat_poly(const Quat& q);
Quat eval(const QuatPoly& a, const Rat& t);
Vec3Q eval(const VecPoly& v, const Rat& t);
QuatPoly scale(const QPoly& s, const QuatPoly& a);
VecPoly scale(const QPoly& s, const VecPoly& v);
VecPoly derivative(const VecPoly& v);
std::size_t degree(const QuatPoly& a);
long degree_or(const VecPoly& v, long zero_value);

/// Monic gcd of the four components (0 for the zero quaternion).
QPoly real_content(const QuatPoly& a);
QPoly real_content(const VecPoly& v);

/// A e A* for e the k-th unit vector (0 -> i, 1 -> j, 2 -> k).
VecPoly axis_image(const QuatPoly& a, int axis);
/// F = A i A*, the non-normalized tangent indicatrix.
inline VecPoly image_of_i(const QuatPoly& a) { return axis_image(a, 0); }

/// Dual quaternion polynomial C = P + eps D.
struct MotionPoly {
  QuatPoly primal;
  QuatPoly dual;

  MotionPoly conj() const { return {primal.conj(), dual.conj()}; }
  /// Divides off the monic gcd of all eight coefficient polynomials.
  MotionPoly normalized() const;

  friend MotionPoly operator*(const MotionPoly& a, const MotionPoly& b) {
    return {a.primal * b.primal, a.primal * b.dual + a.dual * b.primal};
  }
  friend bool operator==(const MotionPoly& a, const MotionPoly& b) {
    return a.primal == b.primal && a.dual == b.dual;
  }
};

/// (alpha + eps b) A, the framing-motion form.
MotionPoly framing_motion(const QPoly& alpha, const VecPoly& b, const QuatPoly& a);

/// P D* + D P* == 0 identically.
bool study_check(const MotionPoly& c);

/// Rational vector-valued function num / den.
struct VecRatPoly {
  VecPoly num;
  QPoly den;
};

/// Trajectory of a point under C: (P - eps D) x (P* + eps D*) / (P P*).
/// Throws StudyConditionError when the Study condition fails and
/// DegenerateError for a zero primal part.
VecRatPoly act_on_point(const MotionPoly& c, const Vec3Q& point);

/// (A v A*, A A*) for the vectorial embedding of v.
std::pair<VecPoly, QPoly> act_on_vector(const QuatPoly& a, const Vec3Q& v);

/// (A1, A2) with A = A1 + A2 j, identifying i with the imaginary unit.
std::pair<CPoly, CPoly> split_complex(const QuatPoly& a);
QuatPoly join_complex(const CPoly& a1, const CPoly& a2);

/// Largest right factor of A from the subalgebra generated by 1 and i, as a
/// monic polynomial over Q(i): gcd(A1, conj(A2)).
CPoly subalgebra_right_factor(const QuatPoly& a);

bool is_reduced_wrt_i(const QuatPoly& a);

/// Removes real factors of positive degree and right factors from the 1,i
/// subalgebra. The rotation A i A* / (A A*) is unchanged.
QuatPoly reduce_wrt_i(const QuatPoly& a);

std::ostream& operator<<(std::ostream& os, const QuatPoly& a);

}  // namespace phframe
