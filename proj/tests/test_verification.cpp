#include <doctest.h>

#include "phframe/errors.hpp"
#include "phframe/framing.hpp"
#include "phframe/verification.hpp"
#include "support/oracles.hpp"
#include "support/paper_data.hpp"

using namespace phframe;
using testdata::P;
using testdata::R;

namespace {

bool sigma_matches(const PHCurve& r, const RationalFunction& sigma) {
  auto [p, q] = oracle::speed_squared(r);
  return p * sigma.den() * sigma.den() == q * sigma.num() * sigma.num();
}

// T = +-F / (A A*) with one sign for all components.
bool indicatrix_matches_rotation(const VecRational& t, const QuatPoly& a) {
  VecPoly f = oracle::F(a);
  QPoly n = quat_norm(a);
  int sign = 0;
  for (std::size_t c = 0; c < 3; ++c) {
    RationalFunction expected(f[c], n);
    if (t[c] == expected) {
      if (sign == -1) return false;
      sign = 1;
    } else if (t[c] == RationalFunction(QPoly::constant(Rat(-1)) * f[c], n)) {
      if (sign == 1) return false;
      sign = -1;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("rational functions") {
  RationalFunction f(P({-1, 0, 1}), P({2, 2}));
  CHECK(f.num() == QPoly{R(-1, 2), R(1, 2)});
  CHECK(f.den() == P({1}));
  CHECK(f(R(3)) == 1);
  RationalFunction g(P({1}), P({0, 1}));
  CHECK((g * RationalFunction::polynomial(P({0, 1}))) == RationalFunction::polynomial(P({1})));
  CHECK(g.derivative() == RationalFunction(P({-1}), P({0, 0, 1})));
  CHECK_THROWS_AS(g(R(0)), PoleError);
}

TEST_CASE("PH check") {
  CHECK_FALSE(ph_check(testdata::curve({P({0, 1}), P({0, 0, 1}), P({})}, P({1}))));

  auto sigma = ph_check(testdata::parabola_reparam());
  REQUIRE(sigma);
  CHECK(sigma->num() == P({1, 0, 2, 0, 1}));
  CHECK(sigma->den() == pow(P({-1, 0, 1}), 3));
  CHECK(sigma_matches(testdata::parabola_reparam(), *sigma));

  PHCurve p8 = integrate_ph(testdata::simple_A(), P({1}));
  auto s8 = ph_check(p8);
  REQUIRE(s8);
  CHECK(s8->num() == P({1, 0, 2, 0, 1}));
  CHECK(s8->den() == P({1}));

  auto s0 = ph_check(testdata::curve({P({3}), P({}), P({1})}, P({2})));
  REQUIRE(s0);
  CHECK(s0->is_zero());

  for (const PHCurve& r : {testdata::n2_curve(), testdata::krajnc1_curve(), testdata::sir2_curve(),
                           testdata::sakkalis_curve(), testdata::sakkalis_p(), testdata::sakkalis_q()}) {
    auto s = ph_check(r);
    REQUIRE(s);
    CHECK(sigma_matches(r, *s));
    CHECK(sgn(s->num().lead()) > 0);
  }
}

TEST_CASE("tangent indicatrix") {
  VecRational t = tangent_indicatrix(testdata::curve({P({0, 1}), P({}), P({})}, P({1})));
  CHECK(t.x == RationalFunction::polynomial(P({1})));
  CHECK(t.y.is_zero());

  CHECK(indicatrix_matches_rotation(tangent_indicatrix(integrate_ph(testdata::simple_A(), P({1}))), testdata::simple_A()));
  CHECK(indicatrix_matches_rotation(tangent_indicatrix(testdata::simple_p6()), testdata::simple_A()));

  VecRational k = tangent_indicatrix(testdata::krajnc1_curve());
  CHECK(k.x * k.x + k.y * k.y + k.z * k.z == RationalFunction::polynomial(P({1})));
  CHECK(indicatrix_matches_rotation(k, testdata::krajnc1_A()));

  CHECK_THROWS_AS(tangent_indicatrix(testdata::curve({P({0, 1}), P({0, 0, 1}), P({})}, P({1}))), DegenerateError);
}

TEST_CASE("every solver basis curve is PH with the rotation's indicatrix") {
  QuatPoly a = testdata::simple_A();
  SolutionSpace s = solve_framing(a, testdata::simple_alpha(), 9);
  for (const auto& b : s.basis) {
    PHCurve r = curve_from_b(b, s.alpha);
    auto sigma = ph_check(r);
    REQUIRE(sigma);
    if (!r.is_constant()) CHECK(indicatrix_matches_rotation(tangent_indicatrix(r), a));
  }
}

TEST_CASE("Euler-Rodrigues frame") {
  QuatPoly one{P({1}), P({}), P({}), P({})};
  auto e = euler_rodrigues_frame(one, R(3));
  CHECK(e[0] == Vec3Q{R(1), R(0), R(0)});
  CHECK(e[2] == Vec3Q{R(0), R(0), R(1)});

  auto k = euler_rodrigues_frame(QuatPoly{P({}), P({}), P({}), P({1})}, R(0));
  CHECK(k[0] == Vec3Q{R(-1), R(0), R(0)});
  CHECK(k[1] == Vec3Q{R(0), R(-1), R(0)});
  CHECK(k[2] == Vec3Q{R(0), R(0), R(1)});
  auto s = euler_rodrigues_frame(testdata::simple_A(), R(0));
  CHECK(s == k);

  // A(0) = 0.
  CHECK_THROWS_AS(euler_rodrigues_frame(QuatPoly{P({0, 1}), P({}), P({}), P({})}, R(0)), DegenerateError);
}

TEST_CASE("osculating-plane construction") {
  QuatPoly one{P({1}), P({}), P({}), P({})};
  CHECK_THROWS_AS(curve_from_osculating(one, RationalFunction::polynomial(P({1}))), DegenerateError);

  gen::Random rnd(31);
  for (int trial = 0; trial < 5; ++trial) {
    QuatPoly a = rnd.quat_poly(2);
    PHCurve r;
    try {
      r = curve_from_osculating(a, RationalFunction::polynomial(P({1})));
    } catch (const DegenerateError&) {
      continue;
    }
    REQUIRE(ph_check(r));
    // Tangent parallel to F.
    VecRational h = hodograph(r);
    VecPoly f = oracle::F(a);
    for (std::size_t c = 0; c < 3; ++c) {
      std::size_t c1 = (c + 1) % 3, c2 = (c + 2) % 3;
      CHECK((h[c1] * RationalFunction::polynomial(f[c2]) - h[c2] * RationalFunction::polynomial(f[c1])).is_zero());
    }
    // Linear in f.
    RationalFunction f1 = RationalFunction::polynomial(P({0, 1}));
    RationalFunction f2 = RationalFunction::polynomial(P({2, 0, 1}));
    PHCurve r1 = curve_from_osculating(a, f1), r2 = curve_from_osculating(a, f2), r12 = curve_from_osculating(a, f1 + f2);
    for (Rat t : {R(1, 3), R(5, 7)}) {
      try {
        CHECK(r12.at(t) == r1.at(t) + r2.at(t));
      } catch (const PoleError&) {
      }
    }
  }
}

TEST_CASE("osculating construction reproduces a FaroukiSir2 solution") {
  QuatPoly a = testdata::sir2_A();
  QPoly alpha = testdata::sir2_alpha();
  SolutionSpace s = solve_framing(a, alpha, 5);
  // The support function of p4 with respect to its osculating planes.
  PHCurve p4 = testdata::sir2_p4();
  VecPoly u = cross(oracle::F(a), derivative(oracle::F(a)));
  RationalFunction f;
  for (std::size_t c = 0; c < 3; ++c) f = f + RationalFunction(p4.num[c], p4.den) * RationalFunction::polynomial(u[c]);
  PHCurve r = curve_from_osculating(a, f);
  CHECK(same_curve(r, p4));
  CHECK(s.contains(oracle::b_of(r, alpha)));
}

TEST_CASE("sampling") {
  auto pts = sample_curve(testdata::n2_curve(), {R(0), R(1)});
  CHECK(pts[0] == Vec3Q{R(-62), R(0), R(-54)});
  CHECK(pts[1] == Vec3Q{R(-144, 4), R(-120, 4), R(-160, 4)});
  CHECK_THROWS_AS(sample_curve(testdata::n2_curve(), {R(-1)}), PoleError);
  PHCurve c = testdata::curve({P({2}), P({4}), P({})}, P({2}));
  CHECK(sample_curve(c, {R(9)})[0] == Vec3Q{R(1), R(2), R(0)});
}
