#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "divlie/rank2.hpp"

using namespace divlie;

TEST_CASE("rank2_bar and rank2_d") {
  CHECK(rank2_bar(LatticeVector{{1, 0}}) == LatticeVector{{0, -1}});
  for (const auto& r : box(2, 3)) {
    CHECK(inner(rank2_bar(r), r) == 0);
    const AlgebraElement d = rank2_d(r);
    CHECK(d.is_divergence_zero());
    if (!is_zero(r)) {
      // d(r) spans the divergence-zero part of degree r
      const auto comp = graded_component(AlgebraKind::DivZero, r);
      REQUIRE(comp.basis.size() == 1);
      const auto& u = d.component(r).u;
      const auto& v = comp.basis[0].u;
      CHECK((u(0) * v(1) - u(1) * v(0)).is_zero());
      CHECK_FALSE(divlie::is_zero(u));
    }
  }
  CoefficientVector u(2);
  u << Scalar(1), Scalar(-1);
  CHECK(rank2_d(LatticeVector{{1, 1}}) == AlgebraElement::D(u, LatticeVector{{1, 1}}));
  CHECK(rank2_d(lattice_zero(2)).is_zero());
  CHECK_THROWS_AS(rank2_bar(LatticeVector{{1, 2, 3}}), RankMismatch);
  CHECK_THROWS_AS(rank2_d(LatticeVector{{1}}), RankMismatch);
}

TEST_CASE("quadratic irrational validation") {
  CHECK_THROWS_AS(QuadraticIrrational::sqrt(4), DomainError);
  CHECK_THROWS_AS(QuadraticIrrational(1, 0, 2, 1), DomainError);
  CHECK_THROWS_AS(QuadraticIrrational(1, 1, 2, 0), DomainError);
  CHECK_THROWS_AS(QuadraticIrrational(-3, 1, 2, 1), DomainError);  // 1.41 - 3 < 0
  CHECK_NOTHROW(QuadraticIrrational(-1, 1, 2, 1));                 // sqrt 2 - 1 > 0
  CHECK_NOTHROW(QuadraticIrrational(1, -1, 5, -2));                // (sqrt 5 - 1) / 2
}

TEST_CASE("alpha half-planes") {
  const auto alpha = QuadraticIrrational::sqrt(2);
  CHECK(alpha_greater(alpha, LatticeVector{{1, -1}}, lattice_zero(2)));
  for (const QuadraticIrrational& a : {QuadraticIrrational::sqrt(2), QuadraticIrrational(1, -1, 5, -2),
                                        QuadraticIrrational(7, 3, 13, 5)}) {
    CHECK(alpha_greater(a, LatticeVector{{0, 1}}, lattice_zero(2)));
    CHECK(alpha_greater(a, lattice_zero(2), LatticeVector{{0, -1}}));
    const double value = a.approx();
    const auto halves = alpha_halfplane(a, 6);
    CHECK(halves.positive.size() + halves.negative.size() == 13 * 13 - 1);
    std::set<std::vector<std::int64_t>> pos;
    for (const auto& v : halves.positive) {
      pos.insert({v(0), v(1)});
      // floating-point oracle; |p alpha + q| is far from 0 on this window
      const double f = static_cast<double>(v(0)) * value + static_cast<double>(v(1));
      CHECK(f > 1e-6);
    }
    for (const auto& v : halves.negative) {
      CHECK(pos.count({-v(0), -v(1)}) == 1);
      CHECK(pos.count({v(0), v(1)}) == 0);
    }
  }
}

TEST_CASE("alpha_between") {
  const auto alpha = QuadraticIrrational::sqrt(2);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coord(-10, 10);
  int done = 0;
  while (done < 30) {
    LatticeVector x{{coord(rng), coord(rng)}};
    if (!alpha_greater(alpha, x, lattice_zero(2))) continue;
    ++done;
    auto between = alpha_between(alpha, x, 40);
    REQUIRE(between);
    CHECK(alpha_greater(alpha, *between, lattice_zero(2)));
    CHECK(alpha_greater(alpha, x, *between));
  }
  CHECK_THROWS_AS(alpha_between(alpha, LatticeVector{{0, -1}}, 5), DomainError);
  // (1,-1) has value 0.414; (0,0) only in a radius-0 box
  CHECK_FALSE(alpha_between(alpha, LatticeVector{{1, -1}}, 0));
}
