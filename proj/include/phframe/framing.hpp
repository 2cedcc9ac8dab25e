#pragma once

#include "phframe/curve.hpp"
#include "phframe/linalg.hpp"
#include "phframe/quaternion.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace phframe {

/// Which of the three equivalent framing identities a system encodes, with
/// E = alpha b' - alpha' b and F = A i A*:
///   cross:  E x F = 0
///   orth:   <E, A j A*> = <E, A k A*> = 0
///   lindep: E = mu F for a real polynomial mu
enum class Condition { cross, orth, lindep };

std::string_view to_string(Condition c);
/// Throws ValidationError for unknown names.
Condition parse_condition(std::string_view name);

/// Homogeneous system in the coefficients of b (three unknowns per power of
/// t, column 3k + c holds component c of t^k), followed by the coefficients
/// of mu for the lindep condition.
struct LinearSystem {
  QuatPoly rotation;
  QPoly alpha;
  std::size_t deg_b = 0;
  std::size_t mu_unknowns = 0;
  Condition condition = Condition::orth;
  RatMatrix matrix;
  std::vector<std::string> warnings;

  std::size_t b_unknowns() const { return 3 * (deg_b + 1); }
};

/// deg alpha + 2 deg A + 2.
std::size_t default_deg_b(const QuatPoly& a, const QPoly& alpha);

/// Coefficient comparison of the selected identity. Throws DegenerateError for
/// alpha = 0 or A = 0. A non-reduced A is accepted with a warning.
LinearSystem build_system(const QuatPoly& a, const QPoly& alpha, std::size_t deg_b, Condition condition);

/// Rows forcing alpha | b componentwise, over the 3(deg_b + 1) b-unknowns.
RatMatrix polynomial_constraints(const QPoly& alpha, std::size_t deg_b);

/// Appends rows over the b-unknowns, zero-padded in the mu columns.
void augment(LinearSystem& sys, const RatMatrix& rows);

enum class SolutionKind { trivial, polynomial, rational };
std::string_view to_string(SolutionKind k);

/// Immutable solution space of a framing system.
struct SolutionSpace {
  QuatPoly rotation;
  QPoly alpha;
  std::size_t deg_b = 0;
  Condition condition = Condition::orth;
  /// Canonical basis (see canonical_basis), as integer coefficient vectors and
  /// as vector polynomials b.
  std::vector<IntVector> coordinates;
  std::vector<VecPoly> basis;
  std::vector<SolutionKind> labels;
  std::vector<std::string> warnings;

  std::size_t dimension() const { return basis.size(); }
  bool contains(const VecPoly& b) const;
  bool has_rational_member() const;
};

SolutionSpace solve_nullspace(const LinearSystem& sys);

/// build_system + solve_nullspace; polynomial_only adds the divisibility rows.
SolutionSpace solve_framing(const QuatPoly& a, const QPoly& alpha, std::size_t deg_b,
                            Condition condition = Condition::orth, bool polynomial_only = false);

/// Coefficient vector of b in the column layout of a system of degree deg_b.
/// Throws std::invalid_argument if b has larger degree.
RatVector b_coordinates(const VecPoly& b, std::size_t deg_b);
VecPoly b_from_coordinates(const IntVector& v, std::size_t deg_b);

/// trivial: b = alpha b0 with constant b0; polynomial: alpha | b otherwise;
/// rational: anything else.
SolutionKind classify_solution(const VecPoly& b, const QPoly& alpha);

/// r = -2 b / alpha, with common factors cancelled and a monic denominator.
PHCurve curve_from_b(const VecPoly& b, const QPoly& alpha);

/// b = -1/2 alpha r for a curve num / den written over the denominator alpha.
/// Throws std::invalid_argument when den does not divide alpha.
VecPoly b_from_curve(const PHCurve& r, const QPoly& alpha);

/// r = integral of lambda A i A* dt with zero constant of integration.
PHCurve integrate_ph(const QuatPoly& a, const QPoly& lambda);

}  // namespace phframe
