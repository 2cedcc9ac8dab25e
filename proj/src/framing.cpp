#include "phframe/framing.hpp"

#include "phframe/errors.hpp"

#include <algorithm>

namespace phframe {

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::cross:
      return "cross";
    case Condition::orth:
      return "orth";
    case Condition::lindep:
      return "lindep";
  }
  return "?";
}

Condition parse_condition(std::string_view name) {
  if (name == "cross") return Condition::cross;
  if (name == "orth") return Condition::orth;
  if (name == "lindep") return Condition::lindep;
  throw ValidationError("unknown condition \"" + std::string(name) + "\" (expected cross, orth or lindep)");
}

std::string_view to_string(SolutionKind k) {
  switch (k) {
    case SolutionKind::trivial:
      return "trivial";
    case SolutionKind::polynomial:
      return "polynomial";
    case SolutionKind::rational:
      return "rational";
  }
  return "?";
}

std::size_t default_deg_b(const QuatPoly& a, const QPoly& alpha) {
  return static_cast<std::size_t>(alpha.degree_or(0)) + 2 * degree(a) + 2;
}

namespace {

// Each unknown contributes one polynomial per scalar identity; the system
// rows are the coefficients of t^m of every identity.
RatMatrix coefficient_rows(const std::vector<std::vector<QPoly>>& identities) {
  std::size_t cols = identities.size();
  std::size_t n_ident = cols ? identities.front().size() : 0;
  RatMatrix m(0, cols);
  for (std::size_t e = 0; e < n_ident; ++e) {
    std::size_t len = 0;
    for (const auto& col : identities) len = std::max(len, col[e].size());
    for (std::size_t power = 0; power < len; ++power) {
      RatVector row(cols, Rat(0));
      bool nonzero = false;
      for (std::size_t j = 0; j < cols; ++j) {
        row[j] = identities[j][e][power];
        nonzero = nonzero || !is_zero(row[j]);
      }
      if (nonzero) m.append_row(row);
    }
  }
  return m;
}

}  // namespace

LinearSystem build_system(const QuatPoly& a, const QPoly& alpha, std::size_t deg_b, Condition condition) {
  if (alpha.is_zero()) throw DegenerateError("denominator alpha must be nonzero");
  if (is_zero(a)) throw DegenerateError("rotation polynomial A must be nonzero");

  LinearSystem sys;
  sys.rotation = a;
  sys.alpha = alpha;
  sys.deg_b = deg_b;
  sys.condition = condition;
  if (!is_reduced_wrt_i(a)) {
    sys.warnings.emplace_back("A is not reduced with respect to i; solutions of the " + std::string(to_string(condition)) +
                              " system need not be exactly the framing motions");
  }

  const VecPoly f = axis_image(a, 0);
  const VecPoly g = axis_image(a, 1);
  const VecPoly h = axis_image(a, 2);
  const QPoly dalpha = alpha.derivative();
  std::vector<std::vector<QPoly>> columns;

  for (std::size_t k = 0; k <= deg_b; ++k) {
    // alpha (t^k)' - alpha' t^k
    QPoly s = -dalpha.shifted(k);
    if (k > 0) s += alpha.shifted(k - 1) * Rat(static_cast<long>(k));
    for (std::size_t c = 0; c < 3; ++c) {
      VecPoly e;
      e[c] = s;
      switch (condition) {
        case Condition::cross: {
          VecPoly x = cross(e, f);
          columns.push_back({x.x, x.y, x.z});
          break;
        }
        case Condition::orth:
          columns.push_back({s * g[c], s * h[c]});
          break;
        case Condition::lindep:
          columns.push_back({e.x, e.y, e.z});
          break;
      }
    }
  }

  if (condition == Condition::lindep) {
    long deg_mu = alpha.degree_or(0) + static_cast<long>(deg_b) - 1 - 2 * static_cast<long>(degree(a));
    for (long m = 0; m <= deg_mu; ++m) {
      columns.push_back({-f.x.shifted(m), -f.y.shifted(m), -f.z.shifted(m)});
      ++sys.mu_unknowns;
    }
  }

  sys.matrix = coefficient_rows(columns);
  if (sys.matrix.cols() == 0) sys.matrix = RatMatrix(0, columns.size());
  return sys;
}

RatMatrix polynomial_constraints(const QPoly& alpha, std::size_t deg_b) {
  if (alpha.is_zero()) throw DegenerateError("denominator alpha must be nonzero");
  const std::size_t n = static_cast<std::size_t>(alpha.degree_or(0));
  const std::size_t cols = 3 * (deg_b + 1);
  RatMatrix rows(0, cols);
  if (n == 0) return rows;
  std::vector<QPoly> remainders;
  for (std::size_t k = 0; k <= deg_b; ++k) remainders.push_back(QPoly::monomial(Rat(1), k) % alpha);
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t m = 0; m < n; ++m) {
      RatVector row(cols, Rat(0));
      for (std::size_t k = 0; k <= deg_b; ++k) row[3 * k + c] = remainders[k][m];
      rows.append_row(row);
    }
  }
  return rows;
}

void augment(LinearSystem& sys, const RatMatrix& rows) {
  if (rows.cols() != sys.b_unknowns()) throw std::invalid_argument("constraint rows do not match the b-unknowns");
  const std::size_t width = sys.b_unknowns() + sys.mu_unknowns;
  if (sys.matrix.cols() != width) sys.matrix = RatMatrix(0, width);
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    RatVector row = rows.row(r);
    row.resize(width, Rat(0));
    sys.matrix.append_row(row);
  }
}

RatVector b_coordinates(const VecPoly& b, std::size_t deg_b) {
  if (degree_or(b, -1) > static_cast<long>(deg_b)) throw std::invalid_argument("b exceeds the system degree");
  RatVector v(3 * (deg_b + 1), Rat(0));
  for (std::size_t k = 0; k <= deg_b; ++k) {
    for (std::size_t c = 0; c < 3; ++c) v[3 * k + c] = b[c][k];
  }
  return v;
}

VecPoly b_from_coordinates(const IntVector& v, std::size_t deg_b) {
  VecPoly b;
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<Rat> coeffs(deg_b + 1);
    for (std::size_t k = 0; k <= deg_b; ++k) coeffs[k] = Rat(v[3 * k + c]);
    b[c] = QPoly(std::move(coeffs));
  }
  return b;
}

bool SolutionSpace::contains(const VecPoly& b) const {
  if (degree_or(b, -1) > static_cast<long>(deg_b)) return false;
  return in_span(coordinates, make_primitive(b_coordinates(b, deg_b)));
}

bool SolutionSpace::has_rational_member() const {
  return std::find(labels.begin(), labels.end(), SolutionKind::rational) != labels.end();
}

SolutionSpace solve_nullspace(const LinearSystem& sys) {
  SolutionSpace space;
  space.rotation = sys.rotation;
  space.alpha = sys.alpha;
  space.deg_b = sys.deg_b;
  space.condition = sys.condition;
  space.warnings = sys.warnings;

  const std::size_t nb = sys.b_unknowns();
  RatMatrix m = sys.matrix;
  if (m.cols() == 0) m = RatMatrix(0, nb + sys.mu_unknowns);
  std::vector<IntVector> kernel = nullspace(m);
  // mu is determined by b (F != 0), so projecting onto b loses nothing.
  for (auto& v : kernel) {
    v.resize(nb);
    make_primitive_in_place(v);
  }
  space.coordinates = canonical_basis(kernel, nb);
  for (const auto& v : space.coordinates) {
    VecPoly b = b_from_coordinates(v, sys.deg_b);
    space.labels.push_back(classify_solution(b, sys.alpha));
    space.basis.push_back(std::move(b));
  }
  return space;
}

SolutionSpace solve_framing(const QuatPoly& a, const QPoly& alpha, std::size_t deg_b, Condition condition,
                            bool polynomial_only) {
  LinearSystem sys = build_system(a, alpha, deg_b, condition);
  if (polynomial_only) augment(sys, polynomial_constraints(alpha, deg_b));
  return solve_nullspace(sys);
}

SolutionKind classify_solution(const VecPoly& b, const QPoly& alpha) {
  if (is_zero(b)) return SolutionKind::trivial;
  VecPoly quotient;
  for (std::size_t c = 0; c < 3; ++c) {
    auto qr = divmod(b[c], alpha);
    if (!qr.remainder.is_zero()) return SolutionKind::rational;
    quotient[c] = qr.quotient;
  }
  bool constant = quotient.x.is_constant() && quotient.y.is_constant() && quotient.z.is_constant();
  return constant ? SolutionKind::trivial : SolutionKind::polynomial;
}

PHCurve curve_from_b(const VecPoly& b, const QPoly& alpha) {
  if (alpha.is_zero()) throw DegenerateError("denominator alpha must be nonzero");
  PHCurve r;
  r.num = Rat(-2) * b;
  r.den = alpha;
  r = r.reduced();
  r.b = b;
  return r;
}

VecPoly b_from_curve(const PHCurve& r, const QPoly& alpha) {
  auto qr = divmod(alpha, r.den);
  if (!qr.remainder.is_zero()) throw std::invalid_argument("curve denominator does not divide alpha");
  return Rat(-1, 2) * scale(qr.quotient, r.num);
}

PHCurve integrate_ph(const QuatPoly& a, const QPoly& lambda) {
  VecPoly f = image_of_i(a);
  PHCurve r;
  r.num = {(lambda * f.x).integral(), (lambda * f.y).integral(), (lambda * f.z).integral()};
  r.den = QPoly::constant(Rat(1));
  r.b = Rat(-1, 2) * r.num;
  r.rotation = a;
  return r;
}

}  // namespace phframe
