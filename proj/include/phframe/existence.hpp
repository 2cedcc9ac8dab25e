#pragma once

#include "phframe/poly_algo.hpp"
#include "phframe/quaternion.hpp"

#include <string_view>
#include <vector>

namespace phframe {

// Existence of truly rational (non-polynomial) PH curves for given A and
// alpha. At a root z of alpha of multiplicity n, write
//   A i A* = sum_i (t - z)^i f_i.
// A non-polynomial solution exists iff {f_0, ..., f_n} is linearly dependent
// for some root. For n >= 3 this holds automatically (four or more vectors
// in three-space).

/// Rank condition flag. For real z the dependence generically means a cusp
/// (n = 1) or an inflection (n = 2) of the projective curve A i A*; the flag
/// records the rank condition only, not a verified singularity.
enum class RootGeometry { none, cusp, inflection, higher_multiplicity };
std::string_view to_string(RootGeometry g);

struct RootVerdict {
  GaussRat root;
  unsigned multiplicity = 0;
  std::vector<Vec3C> f;  // f_0 .. f_n
  bool dependent = false;
  RootGeometry geometry = RootGeometry::none;
};

struct ExistenceReport {
  std::vector<RootVerdict> verdicts;
  bool exists_nonpolynomial = false;
  /// Factors of alpha whose roots are not in Q(i). When present the verdict
  /// is a lower bound only.
  std::vector<QPoly> skipped_factors;
  std::vector<std::string> warnings;
};

/// First `count` Taylor coefficients of A i A* at z.
std::vector<Vec3C> f_coefficients(const QuatPoly& a, const GaussRat& z, std::size_t count);

/// Dependence test on f_0 .. f_n. Throws ValidationError when f_0 = 0 (A not
/// reduced with respect to i) or the list length is not n + 1.
RootVerdict root_verdict(const std::vector<Vec3C>& f, unsigned n);

/// One verdict per root, conjugate pairs represented by the root with
/// im >= 0. Throws ValidationError for a factor list that is not
/// conjugate-closed.
ExistenceReport classify(const QuatPoly& a, const FactoredDenominator& alpha);

/// Factors alpha over Q(i) first; factors outside Q(i) are skipped with a
/// warning and listed in the report.
ExistenceReport classify(const QuatPoly& a, const QPoly& alpha);

/// A = 1 + (a10 + a11 i) t + t^2 tail, which has f_0 x f_1 = 0 at t = 0.
/// Throws ValidationError when the result is not reduced with respect to i
/// (including tail = 0, where A lies in the 1,i subalgebra).
QuatPoly make_cusp_seed(const Rat& a10, const Rat& a11, const QuatPoly& tail);

}  // namespace phframe
