#include "phframe/cli.hpp"

#include "phframe/errors.hpp"
#include "phframe/json_io.hpp"
#include "phframe/poly_algo.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

namespace phframe::cli {

std::string to_decimal(const Rat& x, int significant_digits) {
  mpf_class f(x, 512);
  // %Fg drops trailing zeros and switches to exponent form for extreme values.
  int n = gmp_snprintf(nullptr, 0, "%.*Fg", significant_digits, f.get_mpf_t());
  std::string s(static_cast<std::size_t>(n) + 1, '\0');
  gmp_snprintf(s.data(), s.size(), "%.*Fg", significant_digits, f.get_mpf_t());
  s.resize(static_cast<std::size_t>(n));
  return s;
}

Rat parse_number_arg(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return parse_rat(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits == "+") throw ValidationError("not a number: \"" + text + "\"");
  Rat r = parse_rat(digits);
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, text.size() - dot - 1);
  r /= Rat(scale);
  return r;
}

namespace {

struct GlobalOptions {
  std::string out_path;
  bool strict = false;
  std::string condition;
  long deg_b = -1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open \"" + path + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json_text(read_file(path), path); }

void emit(const GlobalOptions& g, std::ostream& out, const std::string& text) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out_path);
  if (!f) throw ValidationError("cannot write \"" + g.out_path + "\"");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json solve_one(const std::string& path, const GlobalOptions& g, bool polynomial_only, std::vector<std::string>& warnings) {
  ProblemFile p = parse_problem(read_json_file(path));
  if (!p.alpha) throw ValidationError(path + ": missing key \"alpha\"");
  Condition cond = p.options.condition.value_or(Condition::orth);
  if (!g.condition.empty()) cond = parse_condition(g.condition);
  std::size_t deg_b = p.options.deg_b.value_or(default_deg_b(p.rotation, p.alpha->expanded));
  if (g.deg_b >= 0) deg_b = static_cast<std::size_t>(g.deg_b);
  LinearSystem sys = build_system(p.rotation, p.alpha->expanded, deg_b, cond);
  if (polynomial_only || p.options.polynomial_only) augment(sys, polynomial_constraints(p.alpha->expanded, deg_b));
  SolutionSpace space = solve_nullspace(sys);
  for (const auto& w : space.warnings) warnings.push_back(path + ": " + w);
  return to_json(space);
}

Json classify_one(const std::string& path, const GlobalOptions& g, std::vector<std::string>& warnings) {
  ProblemFile p = parse_problem(read_json_file(path));
  if (!p.alpha) throw ValidationError(path + ": missing key \"alpha\"");
  if (!is_reduced_wrt_i(p.rotation)) {
    throw UnsupportedInput(path + ": A is not reduced with respect to i; the existence criteria do not apply");
  }
  ExistenceReport report =
      p.alpha->factored ? classify(p.rotation, *p.alpha->factored) : classify(p.rotation, p.alpha->expanded);
  if (!report.skipped_factors.empty() && g.strict) {
    throw UnsupportedInput(path + ": alpha has factors that were not split over Q(i)");
  }
  for (const auto& w : report.warnings) warnings.push_back(path + ": " + w);
  return to_json(report);
}

// Runs fn over the files with at most `jobs` in flight; results keep input order.
template <class Fn>
Json run_batch(const std::vector<std::string>& files, unsigned jobs, std::ostream& err, Fn fn) {
  std::vector<Json> results(files.size());
  std::vector<std::vector<std::string>> warnings(files.size());
  jobs = std::max(1u, jobs);
  for (std::size_t start = 0; start < files.size(); start += jobs) {
    std::size_t end = std::min(files.size(), start + jobs);
    std::vector<std::future<Json>> running;
    for (std::size_t k = start; k < end; ++k) {
      running.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                   [&, k] { return fn(files[k], warnings[k]); }));
    }
    for (std::size_t k = start; k < end; ++k) results[k] = running[k - start].get();
  }
  for (const auto& ws : warnings) {
    for (const auto& w : ws) err << "warning: " << w << "\n";
  }
  if (results.size() == 1) return results.front();
  return Json(results);
}

std::string describe_roots(const std::vector<RealRootLocation>& roots) {
  std::string s;
  for (const auto& r : roots) {
    if (!s.empty()) s += ", ";
    if (r.lo == r.hi) {
      s += "t = " + r.lo.get_str();
    } else {
      s += "t ~ " + to_decimal(Rat((r.lo + r.hi) / 2), 8);
    }
  }
  return s;
}

void check_no_poles(const QPoly& den, const Rat& a, const Rat& b) {
  if (den.is_constant()) return;
  auto roots = locate_real_roots(den, a, b, Rat(1, 1000000));
  if (!roots.empty()) {
    throw PoleError("pole in the sampling range [" + a.get_str() + ", " + b.get_str() + "]: " + describe_roots(roots));
  }
}

std::vector<Rat> parameter_grid(const Rat& a, const Rat& b, unsigned steps) {
  if (steps == 0) throw ValidationError("--steps must be positive");
  if (a > b) throw ValidationError("empty range: lower bound exceeds upper bound");
  std::vector<Rat> ts;
  ts.reserve(steps + 1);
  for (unsigned k = 0; k <= steps; ++k) ts.push_back(Rat(a + (b - a) * k / steps));
  return ts;
}

struct SampleOptions {
  std::vector<std::string> range{"0", "1"};
  unsigned steps = 100;
  bool exact = false;
  int precision = 17;
  std::string projection = "xy";
  bool indicatrix = false;
};

// Sample points of the curve, or of its tangent indicatrix, over the range.
std::vector<std::pair<Rat, Vec3Q>> sample_points(const PHCurve& curve, const SampleOptions& o) {
  if (o.range.size() != 2) throw ValidationError("--range takes two values");
  Rat a = parse_number_arg(o.range[0]);
  Rat b = parse_number_arg(o.range[1]);
  std::vector<Rat> ts = parameter_grid(a, b, o.steps);
  std::vector<std::pair<Rat, Vec3Q>> out;
  if (o.indicatrix) {
    VecRational tangent = tangent_indicatrix(curve);
    for (std::size_t c = 0; c < 3; ++c) check_no_poles(tangent[c].den(), a, b);
    for (const auto& t : ts) out.push_back({t, {tangent.x(t), tangent.y(t), tangent.z(t)}});
    return out;
  }
  PHCurve r = curve.reduced();
  check_no_poles(r.den, a, b);
  auto pts = sample_curve(r, ts);
  for (std::size_t k = 0; k < ts.size(); ++k) out.push_back({ts[k], pts[k]});
  return out;
}

std::string render_csv(const std::vector<std::pair<Rat, Vec3Q>>& pts, const SampleOptions& o) {
  auto fmt = [&](const Rat& x) { return o.exact ? to_string(x) : to_decimal(x, o.precision); };
  std::string s = "t,x,y,z\n";
  for (const auto& [t, p] : pts) s += fmt(t) + "," + fmt(p.x) + "," + fmt(p.y) + "," + fmt(p.z) + "\n";
  return s;
}

std::string render_svg(const std::vector<std::pair<Rat, Vec3Q>>& pts, const SampleOptions& o, const std::string& title) {
  std::size_t ia = 0;
  std::size_t ib = 1;
  if (o.projection == "xz") {
    ib = 2;
  } else if (o.projection == "yz") {
    ia = 1;
    ib = 2;
  } else if (o.projection != "xy") {
    throw ValidationError("--projection must be xy, xz or yz");
  }
  // Exact samples become doubles only here, for drawing.
  std::vector<std::pair<double, double>> xy;
  for (const auto& [t, p] : pts) xy.emplace_back(p[ia].get_d(), p[ib].get_d());
  double xmin = xy.front().first, xmax = xmin, ymin = xy.front().second, ymax = ymin;
  for (const auto& [x, y] : xy) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  const double size = 600.0;
  const double margin = 40.0;
  double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  auto px = [&](double x) { return margin + (x - xmin) / span * size; };
  auto py = [&](double y) { return margin + size - (y - ymin) / span * size; };

  std::ostringstream svg;
  svg << std::setprecision(8);
  const double total = size + 2 * margin;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total << "\" viewBox=\"0 0 "
      << total << " " << total << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "  <text x=\"" << margin << "\" y=\"" << margin / 2 << "\" font-family=\"sans-serif\" font-size=\"14\">" << title
      << " (" << o.projection << ")</text>\n";
  svg << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < xy.size(); ++k) {
    if (k) svg << ' ';
    svg << px(xy[k].first) << ',' << py(xy[k].second);
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

Json verify_curve(const PHCurve& r, bool& all_ph) {
  auto sigma = ph_check(r);
  if (!sigma) {
    all_ph = false;
    return {{"ph", false}};
  }
  return {{"ph", true}, {"sigma", to_json(*sigma)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational Pythagorean-hodograph curves from framing motions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Expand all help");

  GlobalOptions g;
  app.add_option("--out", g.out_path, "Write the result to this file instead of stdout");
  app.add_flag("--strict", g.strict, "Reject denominators that do not split over Q(i)");
  app.add_option("--condition", g.condition, "Framing identity: cross, orth or lindep")
      ->check(CLI::IsMember({"cross", "orth", "lindep"}));
  app.add_option("--deg-b", g.deg_b, "Degree bound for b")->check(CLI::NonNegativeNumber);

  std::vector<std::string> files;
  unsigned jobs = 1;
  bool polynomial_only = false;
  auto* solve = app.add_subcommand("solve", "Solution space of the framing system");
  solve->add_option("problems", files, "Problem JSON files")->required();
  solve->add_option("--jobs", jobs, "Solve this many problem files concurrently");
  solve->add_flag("--polynomial-only", polynomial_only, "Restrict to polynomial PH curves");

  auto* classify_cmd = app.add_subcommand("classify", "Existence of non-polynomial solutions");
  classify_cmd->add_option("problems", files, "Problem JSON files")->required();
  classify_cmd->add_option("--jobs", jobs, "Classify this many problem files concurrently");

  std::string curve_file;
  auto* verify = app.add_subcommand("verify", "Check the PH property and report the speed");
  verify->add_option("curve", curve_file, "Curve JSON ({num, den} or solve output)")->required();

  std::string problem_file;
  auto* integrate = app.add_subcommand("integrate", "Polynomial PH curve by integrating lambda A i A*");
  integrate->add_option("problem", problem_file, "Problem JSON with A and optional lambda")->required();

  SampleOptions so;
  auto* sample = app.add_subcommand("sample", "Exact samples as CSV");
  sample->add_option("curve", curve_file, "Curve JSON")->required();
  sample->add_option("--range", so.range, "Parameter range a b")->expected(2);
  sample->add_option("--steps", so.steps, "Number of intervals");
  sample->add_flag("--exact", so.exact, "Write p/q strings instead of decimals");
  sample->add_option("--precision", so.precision, "Significant digits")->check(CLI::Range(1, 200));
  sample->add_flag("--indicatrix", so.indicatrix, "Sample the tangent indicatrix instead of the curve");

  auto* plot = app.add_subcommand("plot", "SVG plot of a 2D projection");
  plot->add_option("curve", curve_file, "Curve JSON")->required();
  plot->add_option("--range", so.range, "Parameter range a b")->expected(2);
  plot->add_option("--steps", so.steps, "Number of intervals");
  plot->add_option("--projection", so.projection, "xy, xz or yz")->check(CLI::IsMember({"xy", "xz", "yz"}));
  plot->add_flag("--indicatrix", so.indicatrix, "Plot the tangent indicatrix instead of the curve");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*solve) {
      Json result = run_batch(files, jobs, err, [&](const std::string& f, std::vector<std::string>& w) {
        return solve_one(f, g, polynomial_only, w);
      });
      emit(g, out, dump(result));
    } else if (*classify_cmd) {
      Json result = run_batch(files, jobs, err,
                              [&](const std::string& f, std::vector<std::string>& w) { return classify_one(f, g, w); });
      emit(g, out, dump(result));
    } else if (*verify) {
      Json j = read_json_file(curve_file);
      bool all_ph = true;
      Json result;
      if (j.is_object() && j.contains("basis")) {
        Json curves = Json::array();
        for (std::size_t k = 0; k < j["basis"].size(); ++k) {
          const std::string path = "basis[" + std::to_string(k) + "].curve";
          if (!j["basis"][k].contains("curve")) throw ValidationError(path + ": missing");
          curves.push_back(verify_curve(parse_curve(j["basis"][k]["curve"], path), all_ph));
        }
        result = {{"curves", std::move(curves)}};
      } else {
        result = verify_curve(parse_curve(j), all_ph);
      }
      emit(g, out, dump(result));
      return all_ph ? kOk : kFailure;
    } else if (*integrate) {
      ProblemFile p = parse_problem(read_json_file(problem_file));
      QPoly lambda = p.lambda.value_or(QPoly::constant(Rat(1)));
      emit(g, out, dump(to_json(integrate_ph(p.rotation, lambda))));
    } else if (*sample) {
      PHCurve r = parse_curve(read_json_file(curve_file));
      emit(g, out, render_csv(sample_points(r, so), so));
    } else if (*plot) {
      PHCurve r = parse_curve(read_json_file(curve_file));
      std::string title = so.indicatrix ? "tangent indicatrix" : "curve";
      emit(g, out, render_svg(sample_points(r, so), so, title));
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const UnsupportedInput& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return kPole;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace phframe::cli
