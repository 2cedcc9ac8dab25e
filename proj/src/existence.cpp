#include "phframe/existence.hpp"

#include "phframe/errors.hpp"

#include <sstream>

namespace phframe {

std::string_view to_string(RootGeometry g) {
  switch (g) {
    case RootGeometry::none:
      return "none";
    case RootGeometry::cusp:
      return "cusp";
    case RootGeometry::inflection:
      return "inflection";
    case RootGeometry::higher_multiplicity:
      return "higher_multiplicity";
  }
  return "?";
}

std::vector<Vec3C> f_coefficients(const QuatPoly& a, const GaussRat& z, std::size_t count) {
  const VecPoly f = image_of_i(a);
  std::vector<Vec3C> out(count);
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<GaussRat> shifted = taylor_shift(f[c], z);
    for (std::size_t i = 0; i < count && i < shifted.size(); ++i) out[i][c] = shifted[i];
  }
  return out;
}

RootVerdict root_verdict(const std::vector<Vec3C>& f, unsigned n) {
  if (n == 0) throw ValidationError("root multiplicity must be positive");
  if (f.size() != n + 1) throw ValidationError("expected n + 1 Taylor coefficients");
  if (is_zero(f[0])) throw ValidationError("f_0 vanishes: A is not reduced with respect to i");
  RootVerdict v;
  v.multiplicity = n;
  v.f = f;
  if (n == 1) {
    v.dependent = is_zero(cross(f[0], f[1]));
    v.geometry = v.dependent ? RootGeometry::cusp : RootGeometry::none;
  } else if (n == 2) {
    v.dependent = is_zero(det3(f[0], f[1], f[2]));
    v.geometry = v.dependent ? RootGeometry::inflection : RootGeometry::none;
  } else {
    v.dependent = true;
    v.geometry = RootGeometry::higher_multiplicity;
  }
  return v;
}

ExistenceReport classify(const QuatPoly& a, const FactoredDenominator& alpha) {
  if (!alpha.conjugate_closed()) throw ValidationError("denominator roots are not closed under complex conjugation");
  ExistenceReport report;
  std::vector<RootFactor> seen;
  for (const auto& factor : alpha.factors) {
    // Merge repeated entries for the same root and skip lower conjugates.
    if (sgn(factor.root.im) < 0) continue;
    bool duplicate = false;
    for (const auto& s : seen) duplicate = duplicate || s.root == factor.root;
    if (duplicate) continue;
    unsigned n = 0;
    for (const auto& g : alpha.factors) {
      if (g.root == factor.root) n += g.multiplicity;
    }
    seen.push_back({factor.root, n});
  }
  for (const auto& [root, n] : seen) {
    RootVerdict v = root_verdict(f_coefficients(a, root, n + 1), n);
    v.root = root;
    report.exists_nonpolynomial = report.exists_nonpolynomial || v.dependent;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

ExistenceReport classify(const QuatPoly& a, const QPoly& alpha) {
  GaussianFactorization fac = factor_over_gaussian(alpha);
  ExistenceReport report = classify(a, fac.factored);
  report.skipped_factors = fac.unresolved;
  for (const auto& p : fac.unresolved) {
    std::ostringstream msg;
    msg << "factor " << p << " was not split over Q(i) and was not examined; the verdict is a lower bound";
    report.warnings.push_back(msg.str());
  }
  return report;
}

QuatPoly make_cusp_seed(const Rat& a10, const Rat& a11, const QuatPoly& tail) {
  if (is_zero(tail)) throw ValidationError("tail = 0 puts A in the 1,i subalgebra");
  const QuatPoly linear = quat_poly(std::vector<Quat>{Quat{Rat(1), Rat(0), Rat(0), Rat(0)}, Quat{a10, a11, Rat(0), Rat(0)}});
  const QPoly t2 = QPoly::monomial(Rat(1), 2);
  QuatPoly a = linear + scale(t2, tail);
  if (!is_reduced_wrt_i(a)) throw ValidationError("cusp seed is not reduced with respect to i");
  auto f = f_coefficients(a, GaussRat(0), 2);
  if (!is_zero(cross(f[0], f[1]))) throw std::logic_error("cusp seed violates f_0 x f_1 = 0");
  return a;
}

}  // namespace phframe
