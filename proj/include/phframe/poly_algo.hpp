#pragma once

#include "phframe/poly.hpp"

#include <optional>
#include <vector>

namespace phframe {

/// Positive rational c with p / c having coprime integer coefficients.
/// content(0) = 0.
Rat content(const QPoly& p);
/// p / content(p), with positive leading coefficient.
QPoly primitive_part(const QPoly& p);

/// Coefficients c_i with p = sum_i c_i (t - z)^i.
std::vector<GaussRat> taylor_shift(const CPoly& p, const GaussRat& z);
std::vector<GaussRat> taylor_shift(const QPoly& p, const GaussRat& z);

/// p(t + z) as a polynomial, the same data as taylor_shift.
CPoly substitute_shift(const CPoly& p, const GaussRat& z);
QPoly substitute_shift(const QPoly& p, const Rat& z);

struct SquarefreeFactor {
  QPoly factor;  // monic, squarefree, pairwise coprime
  unsigned multiplicity;
};

/// Yun's algorithm: p = lead(p) * prod factor^multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const QPoly& p);

/// Square root of a rational number when it is a rational square.
std::optional<Rat> rational_sqrt(const Rat& x);

/// s with p = s^2 and positive leading coefficient, when such s exists in Q[t].
/// The zero polynomial maps to zero.
std::optional<QPoly> perfect_square_test(const QPoly& p);

struct RootFactor {
  GaussRat root;
  unsigned multiplicity = 1;
};

/// alpha = unit * prod (t - root)^multiplicity. Valid values are closed under
/// complex conjugation (with matching multiplicities).
struct FactoredDenominator {
  Rat unit{1};
  std::vector<RootFactor> factors;

  bool conjugate_closed() const;
  /// Sum of multiplicities.
  unsigned degree() const;
};

/// Real polynomial unit * prod (t - z_k)^{n_k}. Throws ValidationError for a
/// factor list that is not conjugate-closed or a zero unit.
QPoly expand_factored(const FactoredDenominator& fd);

/// Distinct rational roots with multiplicities.
std::vector<std::pair<Rat, unsigned>> rational_roots(const QPoly& p);

struct GaussianFactorization {
  FactoredDenominator factored;
  /// Monic factors of positive degree whose roots were not found in Q(i).
  std::vector<QPoly> unresolved;
};

/// Roots over Q(i) by rational-root search and the quadratic formula on the
/// remaining squarefree factors. The product of factored and unresolved parts
/// always reproduces p.
GaussianFactorization factor_over_gaussian(const QPoly& p);

/// Number of distinct real roots of p in the closed interval [a, b] (Sturm).
std::size_t count_real_roots(const QPoly& p, const Rat& a, const Rat& b);

struct RealRootLocation {
  Rat lo;
  Rat hi;  // lo == hi when the root is rational and known exactly
};

/// Isolating intervals of width <= tol for the distinct real roots in [a, b].
std::vector<RealRootLocation> locate_real_roots(const QPoly& p, const Rat& a, const Rat& b, const Rat& tol);

}  // namespace phframe
