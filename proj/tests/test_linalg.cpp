#include <doctest.h>

#include "phframe/linalg.hpp"
#include "support/oracles.hpp"

using namespace phframe;

namespace {

RatMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix m;
  for (const auto& r : rows) {
    RatVector v;
    for (long x : r) v.push_back(Rat(x));
    m.append_row(v);
  }
  return m;
}

bool annihilates(const RatMatrix& m, const IntVector& v) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rat s(0);
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * Rat(v[c]);
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("primitive vectors") {
  IntVector v = make_primitive({Rat(0), Rat(-2, 3), Rat(4, 9)});
  CHECK(v == IntVector{0, 3, -2});
  CHECK(make_primitive({Rat(0), Rat(0)}) == IntVector{0, 0});
}

TEST_CASE("rank and nullspace") {
  RatMatrix m = M({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(annihilates(m, ns[0]));
  CHECK(ns[0] == IntVector{1, 1, -1});

  CHECK(nullspace(RatMatrix(0, 3)).size() == 3);
  CHECK(rank(RatMatrix(2, 2)) == 0);
}

TEST_CASE("nullspace properties on random matrices") {
  gen::Random rnd(41);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = rnd.integer(1, 6), cols = rnd.integer(1, 7);
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rnd.integer(0, 2) ? rnd.rational(4, 3) : Rat(0);
    }
    // Duplicate a row combination to force dependence sometimes.
    if (rows > 1 && trial % 2) {
      RatVector extra(cols);
      for (std::size_t c = 0; c < cols; ++c) extra[c] = m(0, c) * 2 - m(1, c);
      m.append_row(extra);
    }
    auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == cols);
    for (const auto& v : ns) CHECK(annihilates(m, v));
    auto basis = canonical_basis(ns, cols);
    CHECK(basis.size() == ns.size());
    for (const auto& v : ns) CHECK(in_span(basis, v));
    // Canonical form does not depend on the spanning set given.
    std::vector<IntVector> shuffled(ns.rbegin(), ns.rend());
    if (shuffled.size() > 1) {
      for (std::size_t c = 0; c < cols; ++c) shuffled[0][c] += shuffled[1][c] * 3;
    }
    CHECK(canonical_basis(shuffled, cols) == basis);
  }
}
