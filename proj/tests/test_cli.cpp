#include <doctest.h>

#include "phframe/cli.hpp"
#include "phframe/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef PHFRAME_FIXTURE_DIR
#error "PHFRAME_FIXTURE_DIR must be defined"
#endif

using namespace phframe;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "phframe");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(PHFRAME_FIXTURE_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("phframe_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("number arguments") {
  CHECK(cli::parse_number_arg("-0.25") == Rat(-1, 4));
  CHECK(cli::parse_number_arg("3/6") == Rat(1, 2));
  CHECK(cli::parse_number_arg("2") == 2);
  CHECK(cli::to_decimal(Rat(1, 3), 5) == "0.33333");
  CHECK(cli::to_decimal(Rat(-62), 17) == "-62");
}

TEST_CASE("solve") {
  Result r = run({"solve", fixture("simple.json")});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["dimension"] == 4);

  Result again = run({"solve", fixture("simple.json")});
  CHECK(again.out == r.out);

  CHECK(Json::parse(run({"solve", fixture("simple.json"), "--deg-b", "9"}).out)["dimension"] == 6);
  CHECK(Json::parse(run({"--condition", "lindep", "solve", fixture("simple.json")}).out)["dimension"] == 4);

  std::string one = temp_file("one.json", R"({"A": {"w": ["1"]}, "alpha": {"coeffs": ["1"]}, "options": {"deg_b": 0}})");
  CHECK(Json::parse(run({"solve", one}).out)["dimension"] == 3);

  Result batch = run({"solve", fixture("simple.json"), fixture("krajnc1.json"), "--jobs", "2"});
  REQUIRE(batch.code == 0);
  Json arr = Json::parse(batch.out);
  REQUIRE(arr.is_array());
  CHECK(arr[0]["dimension"] == 4);
  CHECK(arr[1]["dimension"] == 4);
}

TEST_CASE("solve rejects bad input") {
  CHECK(run({"solve", temp_file("noA.json", R"({"alpha": {"coeffs": ["1"]}})")}).code == 2);
  CHECK(run({"solve", temp_file("garbage.json", "{not json")}).code == 2);
  CHECK(run({"solve", temp_file("badrat.json", R"({"A": {"w": ["1/0"]}, "alpha": {"coeffs": ["1"]}})")}).code == 2);
  CHECK(run({"solve", temp_file("badkey.json", R"({"A": {"q": ["1"]}, "alpha": {"coeffs": ["1"]}})")}).code == 2);
  CHECK(run({"solve", temp_file("conj.json",
                                R"({"A": {"w": ["1"]}, "alpha": {"factors": [{"root": ["0", "1"], "mult": 1}]}})")})
            .code == 2);
  CHECK(run({"solve", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classify") {
  Result r = run({"classify", fixture("farouki_sakkalis.json")});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["exists_nonpolynomial"] == true);
  REQUIRE(j["roots"].size() == 2);
  CHECK(j["roots"][0]["geometry"] == "cusp");
  CHECK(j["roots"][1]["geometry"] == "cusp");

  std::string lin = temp_file("lin.json", R"({"A": {"w": ["0", "0", "1"], "x": ["0", "-1"], "y": ["0", "-1"], "z": ["1"]},
                                              "alpha": {"coeffs": ["-1", "1"]}})");
  CHECK(Json::parse(run({"classify", lin}).out)["exists_nonpolynomial"] == false);

  std::string cubic = temp_file("cubic.json", R"({"A": {"w": ["0", "0", "1"], "x": ["0", "-1"], "y": ["0", "-1"], "z": ["1"]},
                                                  "alpha": {"coeffs": ["-2", "0", "0", "1"]}})");
  Result lenient = run({"classify", cubic});
  CHECK(lenient.code == 0);
  CHECK(lenient.err.find("warning") != std::string::npos);
  CHECK(run({"--strict", "classify", cubic}).code == 3);

  std::string quartic = temp_file("quartic.json", R"({"A": {"w": ["0", "0", "1"], "x": ["0", "-1"], "y": ["0", "-1"], "z": ["1"]},
                                                    "alpha": {"coeffs": ["4", "0", "5", "0", "1"]}})");
  Json q = Json::parse(run({"--strict", "classify", quartic}).out);
  CHECK(q["roots"].size() == 2);  // conjugates merged
  CHECK(q["skipped"].empty());

  std::string unreduced = temp_file("unreduced.json", R"({"A": {"w": ["1", "1"]}, "alpha": {"coeffs": ["0", "1"]}})");
  CHECK(run({"classify", unreduced}).code == 3);
}

TEST_CASE("verify") {
  Result r = run({"verify", fixture("parabola_reparam.json")});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ph"] == true);
  CHECK(j["sigma"]["num"] == Json({"1/1", "0/1", "2/1", "0/1", "1/1"}));

  std::string parabola = temp_file("parabola.json", R"({"num": {"x": ["0", "1"], "y": ["0", "0", "1"]}, "den": ["1"]})");
  Result np = run({"verify", parabola});
  CHECK(np.code == 1);
  CHECK(Json::parse(np.out)["ph"] == false);

  std::string solved = std::filesystem::temp_directory_path() / "phframe_test_solved.json";
  REQUIRE(run({"solve", fixture("n2.json"), "--out", solved}).code == 0);
  Result all = run({"verify", solved});
  CHECK(all.code == 0);
  for (const auto& c : Json::parse(all.out)["curves"]) CHECK(c["ph"] == true);
}

TEST_CASE("integrate") {
  std::string prob = temp_file("int.json", R"({"A": {"w": ["0", "0", "1"], "x": ["0", "-1"], "y": ["0", "-1"], "z": ["1"]}})");
  Result r = run({"integrate", prob});
  REQUIRE(r.code == 0);
  PHCurve c = parse_curve(Json::parse(r.out));
  CHECK(c.num.x.degree() == 5);
  CHECK(c.den == QPoly::constant(Rat(1)));
}

TEST_CASE("sample") {
  Result r = run({"sample", fixture("n2_curve.json"), "--range", "0", "1", "--steps", "100"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == "t,x,y,z");
  CHECK(rows[1] == "0,-62,0,-54");
  CHECK(rows[101] == "1,-36,-30,-40");

  Result exact = run({"sample", fixture("n2_curve.json"), "--steps", "2", "--exact"});
  CHECK(exact.out.find("1/2,") != std::string::npos);

  Result pole = run({"sample", fixture("n2_curve.json"), "--range", "-2", "0"});
  CHECK(pole.code == 4);
  CHECK(pole.err.find("t = -1") != std::string::npos);

  Result ind = run({"sample", fixture("n2_curve.json"), "--indicatrix", "--range", "-3", "0.5"});
  CHECK(ind.code == 0);
}

TEST_CASE("plot") {
  Result r = run({"plot", fixture("n2_curve.json"), "--projection", "xz"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("<polyline") != std::string::npos);
  CHECK(run({"plot", fixture("n2_curve.json"), "--projection", "xw"}).code == 2);
  CHECK(run({"plot", fixture("n2_curve.json"), "--range", "-2", "0"}).code == 4);
  CHECK(run({"plot", fixture("n2_curve.json"), "--indicatrix", "--range", "-3", "0.5"}).code == 0);
}
