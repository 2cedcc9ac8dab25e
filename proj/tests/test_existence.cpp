#include <doctest.h>

#include "phframe/errors.hpp"
#include "phframe/existence.hpp"
#include "phframe/framing.hpp"
#include "support/oracles.hpp"
#include "support/paper_data.hpp"

using namespace phframe;
using testdata::C;
using testdata::P;
using testdata::Q;
using testdata::R;

namespace {

std::vector<Vec3C> first(const std::vector<Vec3C>& f, std::size_t n) { return {f.begin(), f.begin() + n}; }

std::vector<Vec3C> f_by_derivatives(const QuatPoly& a, const GaussRat& z, std::size_t count) {
  VecPoly f = oracle::F(a);
  auto x = oracle::taylor_by_derivatives(f.x, z, count);
  auto y = oracle::taylor_by_derivatives(f.y, z, count);
  auto w = oracle::taylor_by_derivatives(f.z, z, count);
  std::vector<Vec3C> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back({x[k], y[k], w[k]});
  return out;
}

FactoredDenominator roots(std::initializer_list<std::pair<GaussRat, unsigned>> list) {
  FactoredDenominator fd;
  for (const auto& [z, n] : list) fd.factors.push_back({z, n});
  return fd;
}

}  // namespace

TEST_CASE("taylor coefficients of F") {
  auto f = f_coefficients(testdata::simple_A(), C(-1), 5);
  CHECK(f == testdata::n2_f());
  CHECK(f_coefficients(testdata::krajnc1_A(), C(0, 1), 5) == testdata::krajnc1_f());

  gen::Random rnd(13);
  for (int trial = 0; trial < 10; ++trial) {
    QuatPoly a = rnd.quat_poly(2);
    GaussRat z(rnd.rational(), rnd.rational());
    CHECK(f_coefficients(a, z, 5) == f_by_derivatives(a, z, 5));
  }
}

TEST_CASE("root verdicts") {
  auto n2 = root_verdict(first(testdata::n2_f(), 3), 2);
  CHECK(n2.dependent);
  CHECK(n2.geometry == RootGeometry::inflection);
  CHECK(is_zero(oracle::det3c(n2.f[0], n2.f[1], n2.f[2])));

  auto k1 = root_verdict(first(testdata::krajnc1_f(), 2), 1);
  CHECK(k1.dependent);
  CHECK(k1.geometry == RootGeometry::cusp);

  std::vector<Vec3C> generic{testdata::VC(1, 0, 0), testdata::VC(0, 1, 0), testdata::VC(0, 0, 1)};
  auto g = root_verdict(generic, 2);
  CHECK_FALSE(g.dependent);
  CHECK(g.geometry == RootGeometry::none);
  CHECK_FALSE(root_verdict({generic[0], generic[1]}, 1).dependent);

  std::vector<Vec3C> four(4, testdata::VC(1, 0, 0));
  CHECK(root_verdict(four, 3).geometry == RootGeometry::higher_multiplicity);

  CHECK_THROWS_AS(root_verdict(generic, 0), ValidationError);
  CHECK_THROWS_AS(root_verdict(generic, 1), ValidationError);
  CHECK_THROWS_AS(root_verdict({Vec3C{}, generic[0]}, 1), ValidationError);
}

TEST_CASE("classifier on the paper examples") {
  ExistenceReport sak = classify(testdata::sakkalis_A(), testdata::sakkalis_alpha());
  CHECK(sak.exists_nonpolynomial);
  REQUIRE(sak.verdicts.size() == 2);
  CHECK(sak.verdicts[0].root == C(0));
  CHECK(sak.verdicts[1].root == C(1));
  CHECK(sak.verdicts[0].f[0] == testdata::VC(0, -8, 6));
  CHECK(sak.verdicts[0].f[1] == testdata::VC(0, 16, -12));
  CHECK(sak.verdicts[1].f[0] == testdata::VC(-8, -4, 8));
  CHECK(sak.verdicts[1].f[1] == testdata::VC(-16, -8, 16));

  ExistenceReport kr = classify(testdata::krajnc1_A(), testdata::krajnc1_alpha());
  REQUIRE(kr.verdicts.size() == 1);
  CHECK(kr.verdicts[0].root == C(0, 1));

  CHECK_FALSE(classify(testdata::simple_A(), P({-1, 1})).exists_nonpolynomial);
  CHECK(classify(testdata::simple_A(), testdata::simple_alpha()).exists_nonpolynomial);
}

TEST_CASE("conjugate pairs are merged") {
  ExistenceReport r = classify(testdata::krajnc1_A(), roots({{C(0, -1), 1}, {C(0, 1), 1}}));
  REQUIRE(r.verdicts.size() == 1);
  CHECK(r.verdicts[0].root.im > 0);
}

TEST_CASE("factors outside Q(i) are skipped") {
  ExistenceReport r = classify(testdata::simple_A(), P({-2, 0, 0, 1}) * P({0, 1}));
  CHECK(r.skipped_factors.size() == 1);
  CHECK_FALSE(r.warnings.empty());
  CHECK(r.verdicts.size() == 1);
}

TEST_CASE("scaling A does not change the verdict") {
  QuatPoly a = testdata::krajnc1_A();
  QuatPoly scaled = scale(P({5}), a);
  CHECK(classify(scaled, testdata::krajnc1_alpha()).exists_nonpolynomial ==
        classify(a, testdata::krajnc1_alpha()).exists_nonpolynomial);
}

TEST_CASE("cusp seeds") {
  gen::Random rnd(19);
  int built = 0;
  for (int trial = 0; trial < 20 && built < 8; ++trial) {
    QuatPoly tail = rnd.quat_poly(0);
    QuatPoly a;
    try {
      a = make_cusp_seed(rnd.rational(), rnd.rational(), tail);
    } catch (const std::exception&) {
      continue;
    }
    ++built;
    auto f = f_by_derivatives(a, C(0), 2);
    CHECK(oracle::cross_zero(f[0], f[1]));
    CHECK(is_reduced_wrt_i(a));
    CHECK(classify(a, P({0, 1})).exists_nonpolynomial);
    SolutionSpace s = solve_framing(a, P({0, 1}), default_deg_b(a, P({0, 1})) + 2);
    CHECK(s.has_rational_member());
  }
  CHECK(built >= 5);
  CHECK_THROWS(make_cusp_seed(R(1), R(1), QuatPoly{}));
}

TEST_CASE("spec examples for the classifier building blocks") {
  QuatPoly one{P({1}), P({}), P({}), P({})};
  auto f = f_coefficients(one, C(0), 3);
  CHECK(f[0] == testdata::VC(1, 0, 0));
  CHECK(is_zero(f[1]));
  CHECK(is_zero(f[2]));

  QuatPoly j_tail{P({}), P({}), P({1}), P({})};
  QuatPoly a = make_cusp_seed(R(0), R(0), j_tail);
  CHECK(a == Q(P({1}), P({}), P({0, 0, 1}), P({})));
  auto g = f_by_derivatives(a, C(0), 2);
  CHECK(oracle::cross_zero(g[0], g[1]));

  QuatPoly k_tail{P({}), P({}), P({}), P({1})};
  auto h = f_by_derivatives(make_cusp_seed(R(1), R(2), k_tail), C(0), 2);
  CHECK(oracle::cross_zero(h[0], h[1]));

  ExistenceReport simple = classify(testdata::simple_A(), testdata::simple_alpha());
  REQUIRE(simple.verdicts.size() == 1);
  CHECK(simple.verdicts[0].multiplicity == 3);
  CHECK(simple.verdicts[0].geometry == RootGeometry::higher_multiplicity);
}

TEST_CASE("conjugate roots give conjugate coefficients") {
  gen::Random rnd(37);
  for (int trial = 0; trial < 10; ++trial) {
    QuatPoly a = rnd.quat_poly(2);
    GaussRat z(rnd.rational(), rnd.rational());
    auto f = f_coefficients(a, z, 3);
    auto g = f_coefficients(a, z.conj(), 3);
    for (std::size_t k = 0; k < 3; ++k) CHECK(g[k] == Vec3C{f[k].x.conj(), f[k].y.conj(), f[k].z.conj()});
    if (is_zero(f[0])) continue;
    CHECK(root_verdict(first(f, 2), 1).dependent == root_verdict(first(g, 2), 1).dependent);
    CHECK(root_verdict(f, 2).dependent == root_verdict(g, 2).dependent);
    // f_0 = F(z).
    VecPoly big = oracle::F(a);
    CHECK(f[0] == Vec3C{big.x.eval(z), big.y.eval(z), big.z.eval(z)});
  }
}
