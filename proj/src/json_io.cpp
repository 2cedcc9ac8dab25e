#include "phframe/json_io.hpp"

#include "phframe/errors.hpp"

namespace phframe {

Json to_json(const Rat& x) { return to_string(x); }

Json to_json(const GaussRat& x) { return Json::array({to_string(x.re), to_string(x.im)}); }

Json to_json(const QPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

Json to_json(const QuatPoly& a) {
  return {{"w", to_json(a.w)}, {"x", to_json(a.x)}, {"y", to_json(a.y)}, {"z", to_json(a.z)}};
}

Json to_json(const VecPoly& v) { return {{"x", to_json(v.x)}, {"y", to_json(v.y)}, {"z", to_json(v.z)}}; }

Json to_json(const PHCurve& r) { return {{"num", to_json(r.num)}, {"den", to_json(r.den)}}; }

Json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const SolutionSpace& s) {
  Json basis = Json::array();
  for (std::size_t k = 0; k < s.basis.size(); ++k) {
    basis.push_back({{"b", to_json(QuatPoly::vector(s.basis[k]))},
                     {"label", std::string(to_string(s.labels[k]))},
                     {"curve", to_json(curve_from_b(s.basis[k], s.alpha))}});
  }
  return {{"dimension", s.dimension()}, {"basis", std::move(basis)}};
}

Json to_json(const ExistenceReport& r) {
  Json roots = Json::array();
  for (const auto& v : r.verdicts) {
    Json f = Json::array();
    for (const auto& vec : v.f) f.push_back(Json::array({to_json(vec.x), to_json(vec.y), to_json(vec.z)}));
    roots.push_back({{"z", to_json(v.root)},
                     {"n", v.multiplicity},
                     {"dependent", v.dependent},
                     {"geometry", std::string(to_string(v.geometry))},
                     {"f", std::move(f)}});
  }
  Json skipped = Json::array();
  for (const auto& p : r.skipped_factors) skipped.push_back(to_json(p));
  return {{"roots", std::move(roots)}, {"exists_nonpolynomial", r.exists_nonpolynomial}, {"skipped", std::move(skipped)}};
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

}  // namespace

Rat parse_rat(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return phframe::parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Int(j.dump()));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path, "expected a rational string \"p/q\" or an integer");
}

GaussRat parse_gauss(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected a [\"re\", \"im\"] pair");
  return {parse_rat(j[0], path + "[0]"), parse_rat(j[1], path + "[1]")};
}

QPoly parse_poly(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of coefficients");
  std::vector<Rat> c;
  for (std::size_t k = 0; k < j.size(); ++k) c.push_back(parse_rat(j[k], path + "[" + std::to_string(k) + "]"));
  return QPoly(std::move(c));
}

QuatPoly parse_quat_poly(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with keys w, x, y, z");
  QuatPoly a;
  for (const auto& [key, value] : j.items()) {
    if (key == "w") {
      a.w = parse_poly(value, path + ".w");
    } else if (key == "x") {
      a.x = parse_poly(value, path + ".x");
    } else if (key == "y") {
      a.y = parse_poly(value, path + ".y");
    } else if (key == "z") {
      a.z = parse_poly(value, path + ".z");
    } else {
      fail(path, "unexpected key \"" + key + "\"");
    }
  }
  return a;
}

VecPoly parse_vec_poly(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with keys x, y, z");
  VecPoly v;
  for (const auto& [key, value] : j.items()) {
    if (key == "x") {
      v.x = parse_poly(value, path + ".x");
    } else if (key == "y") {
      v.y = parse_poly(value, path + ".y");
    } else if (key == "z") {
      v.z = parse_poly(value, path + ".z");
    } else {
      fail(path, "unexpected key \"" + key + "\"");
    }
  }
  return v;
}

PHCurve parse_curve(const Json& j, const std::string& path) {
  PHCurve r;
  r.num = parse_vec_poly(require(j, "num", path), path + ".num");
  r.den = parse_poly(require(j, "den", path), path + ".den");
  if (r.den.is_zero()) fail(path + ".den", "denominator must be nonzero");
  return r;
}

AlphaSpec parse_alpha(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected {\"coeffs\": ...} or {\"unit\": ..., \"factors\": ...}");
  AlphaSpec spec;
  if (j.contains("coeffs")) {
    spec.expanded = parse_poly(j["coeffs"], path + ".coeffs");
    if (spec.expanded.is_zero()) fail(path + ".coeffs", "alpha must be nonzero");
    return spec;
  }
  FactoredDenominator fd;
  fd.unit = j.contains("unit") ? parse_rat(j["unit"], path + ".unit") : Rat(1);
  const Json& factors = require(j, "factors", path);
  if (!factors.is_array()) fail(path + ".factors", "expected an array");
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const std::string fp = path + ".factors[" + std::to_string(k) + "]";
    RootFactor f;
    f.root = parse_gauss(require(factors[k], "root", fp), fp + ".root");
    const Json& mult = require(factors[k], "mult", fp);
    if (!mult.is_number_integer() || mult.get<long long>() < 1) fail(fp + ".mult", "expected a positive integer");
    f.multiplicity = mult.get<unsigned>();
    fd.factors.push_back(f);
  }
  try {
    spec.expanded = expand_factored(fd);
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
  spec.factored = std::move(fd);
  return spec;
}

ProblemFile parse_problem(const Json& j) {
  if (!j.is_object()) fail("problem", "expected a JSON object");
  ProblemFile p;
  p.rotation = parse_quat_poly(require(j, "A", "problem"), "A");
  if (is_zero(p.rotation)) fail("A", "rotation polynomial must be nonzero");
  if (j.contains("alpha")) p.alpha = parse_alpha(j["alpha"], "alpha");
  if (j.contains("lambda")) p.lambda = parse_poly(j["lambda"], "lambda");
  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) fail("options", "expected an object");
    if (o.contains("condition")) {
      if (!o["condition"].is_string()) fail("options.condition", "expected a string");
      p.options.condition = parse_condition(o["condition"].get<std::string>());
    }
    if (o.contains("deg_b")) {
      if (!o["deg_b"].is_number_integer() || o["deg_b"].get<long long>() < 0) {
        fail("options.deg_b", "expected a non-negative integer");
      }
      p.options.deg_b = o["deg_b"].get<std::size_t>();
    }
    if (o.contains("polynomial_only")) {
      if (!o["polynomial_only"].is_boolean()) fail("options.polynomial_only", "expected a boolean");
      p.options.polynomial_only = o["polynomial_only"].get<bool>();
    }
  }
  return p;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(source + ": malformed JSON: " + e.what());
  }
}

}  // namespace phframe
