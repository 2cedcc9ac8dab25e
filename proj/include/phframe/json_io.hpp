#pragma once

#include "phframe/curve.hpp"
#include "phframe/existence.hpp"
#include "phframe/framing.hpp"
#include "phframe/verification.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace phframe {

using Json = nlohmann::json;

// Wire formats. Rationals are "p/q" strings (integers are also accepted on
// input), Gaussian rationals ["re", "im"] pairs, polynomials ascending arrays.
// All parse_* functions throw ValidationError with a path-qualified message.

Json to_json(const Rat& x);
Json to_json(const GaussRat& x);
Json to_json(const QPoly& p);
Json to_json(const QuatPoly& a);
Json to_json(const VecPoly& v);
Json to_json(const PHCurve& r);
Json to_json(const RationalFunction& f);
Json to_json(const SolutionSpace& s);
Json to_json(const ExistenceReport& r);

Rat parse_rat(const Json& j, const std::string& path);
GaussRat parse_gauss(const Json& j, const std::string& path);
QPoly parse_poly(const Json& j, const std::string& path);
QuatPoly parse_quat_poly(const Json& j, const std::string& path);
VecPoly parse_vec_poly(const Json& j, const std::string& path);
PHCurve parse_curve(const Json& j, const std::string& path = "curve");

/// Denominator given either as {"coeffs": [...]} or as
/// {"unit": "c", "factors": [{"root": ["re", "im"], "mult": n}]}.
struct AlphaSpec {
  QPoly expanded;
  std::optional<FactoredDenominator> factored;
};
AlphaSpec parse_alpha(const Json& j, const std::string& path);

struct ProblemOptions {
  std::optional<Condition> condition;
  std::optional<std::size_t> deg_b;
  bool polynomial_only = false;
};

struct ProblemFile {
  QuatPoly rotation;
  std::optional<AlphaSpec> alpha;
  std::optional<QPoly> lambda;
  ProblemOptions options;
};

/// Requires "A"; "alpha", "lambda" and "options" are optional at this level.
ProblemFile parse_problem(const Json& j);

/// Parses JSON text, mapping syntax errors to ValidationError.
Json parse_json_text(const std::string& text, const std::string& source);

}  // namespace phframe
