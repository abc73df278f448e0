#include <doctest.h>

#include <algorithm>
#include <map>

#include "divlie/irrep.hpp"
#include "oracles.hpp"

using namespace divlie;

namespace {

// All dominant weights of rank n with marks bounded by `cap`.
std::vector<SlWeight> dominant_weights(int n, int cap) {
  std::vector<SlWeight> out;
  SlWeight w = SlWeight::zero(n);
  while (true) {
    out.push_back(w);
    int k = 0;
    while (k < n - 1 && w.marks[static_cast<std::size_t>(k)] == cap) w.marks[static_cast<std::size_t>(k++)] = 0;
    if (k == n - 1) break;
    ++w.marks[static_cast<std::size_t>(k)];
  }
  return out;
}

SparseColumn column(const Operator& op, Eigen::Index b) {
  SparseColumn out;
  for (Operator::InnerIterator it(op, b); it; ++it) {
    if (!it.value().is_zero()) out.emplace_back(it.row(), it.value());
  }
  return out;
}

}  // namespace

TEST_CASE("weyl_dim") {
  for (int k = 0; k < 8; ++k) CHECK(weyl_dim(SlWeight{{k}}) == static_cast<std::uint64_t>(k + 1));
  for (int n = 2; n <= 6; ++n) CHECK(weyl_dim(SlWeight::fundamental(n, 1)) == static_cast<std::uint64_t>(n));
  CHECK(weyl_dim(SlWeight{{1, 1}}) == 8);
  CHECK_THROWS(weyl_dim(SlWeight{{-1, 0}}));
  // agrees with tableau counting
  for (int n = 2; n <= 4; ++n) {
    for (const auto& w : dominant_weights(n, 3)) CHECK(weyl_dim(w) == oracle::count_ssyt(w.partition(), n));
  }
}

TEST_CASE("fundamental irreps") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      Irrep v = fundamental_irrep(n, k);
      std::uint64_t binom = 1;
      for (int q = 0; q < k; ++q) binom = binom * static_cast<std::uint64_t>(n - q) / static_cast<std::uint64_t>(q + 1);
      CHECK(static_cast<std::uint64_t>(v.dim()) == binom);
      CHECK(check_gl_relations(v).empty());
    }
  }
  Irrep nat = fundamental_irrep(2, 1);
  auto col = column(nat.E(0, 1), 1);
  REQUIRE(col.size() == 1);
  CHECK(col[0].first == 0);
  CHECK(col[0].second == Scalar(1));
  Irrep top = fundamental_irrep(3, 2);
  CHECK(column(top.E(0, 1), 0).empty());
  CHECK_THROWS(fundamental_irrep(3, 3));
  CHECK_THROWS(fundamental_irrep(3, 0));
}

TEST_CASE("build_irrep examples") {
  SUBCASE("trivial module") {
    Scalar c(Rational(5, 2));
    Irrep v = build_irrep(SlWeight::zero(3), c);
    CHECK(v.dim() == 1);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j) CHECK(v.E(i, j).nonZeros() == 0);
      }
    }
    CHECK(check_gl_relations(v).empty());
  }
  SUBCASE("natural module of gl_2") {
    Irrep v = build_irrep(SlWeight{{1}}, Scalar(0));
    CHECK(v.dim() == 2);
    auto col = column(v.E(1, 0), 0);
    REQUIRE(col.size() == 1);
    CHECK(col[0].first == 1);
    CHECK(col[0].second == Scalar(1));
    CHECK(v.diagonal(0, 0) == Scalar(Rational(1, 2)));
    CHECK(v.diagonal(1, 0) == Scalar(Rational(-1, 2)));
  }
  SUBCASE("adjoint of sl_3") {
    Irrep v = build_irrep(SlWeight{{1, 1}}, Scalar(3));
    CHECK(v.dim() == 8);
    CHECK(check_gl_relations(v).empty());
  }
  SUBCASE("size cap") {
    IrrepOptions small;
    small.max_dim = 10;
    CHECK_THROWS_AS(build_irrep(SlWeight{{2, 2}}, Scalar(0), small), DomainError);
  }
}

TEST_CASE("build_irrep matches the Weyl dimension and gl relations") {
  for (int n = 2; n <= 4; ++n) {
    const int cap = n == 2 ? 12 : (n == 3 ? 5 : 2);
    for (const auto& w : dominant_weights(n, cap)) {
      if (weyl_dim(w) > 200) continue;
      Irrep v = build_irrep(w, Scalar(Rational(1, 3)));
      CHECK(static_cast<std::uint64_t>(v.dim()) == weyl_dim(w));
      // weight multiplicities are Weyl-group (permutation) invariant
      std::map<std::vector<std::int64_t>, int> mult;
      for (const auto& g : v.gl_weights()) mult[std::vector<std::int64_t>(g.data(), g.data() + g.size())]++;
      for (auto [wt, m] : mult) {
        auto sorted = wt;
        std::sort(sorted.begin(), sorted.end());
        do {
          CHECK(mult[sorted] == m);
        } while (std::next_permutation(sorted.begin(), sorted.end()));
      }
      if (v.dim() <= 64) CHECK(check_gl_relations(v).empty());
    }
  }
}

TEST_CASE("matrix_of_rank_one") {
  Irrep nat = build_irrep(SlWeight{{1}}, Scalar(7));
  CHECK(matrix_of_rank_one(lattice_zero(2), coefficients({1, 2}), nat).nonZeros() == 0);
  CHECK(matrix_of_rank_one(lattice({1, 3}), coefficient_zero(2), nat).nonZeros() == 0);
  Operator op = matrix_of_rank_one(lattice({1, 1}), coefficients({1, -1}), nat);
  Operator expect = nat.E(0, 0) - nat.E(0, 1) + nat.E(1, 0) - nat.E(1, 1);
  Operator diff = op - expect;
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k) {
    for (Operator::InnerIterator it(diff, k); it; ++it) CHECK(it.value().is_zero());
  }
  // traceless input: independent of the central scalar
  Irrep other = build_irrep(SlWeight{{1}}, Scalar(-2));
  Operator op2 = matrix_of_rank_one(lattice({1, 1}), coefficients({1, -1}), other);
  Operator d2 = op - op2;
  for (Eigen::Index k = 0; k < d2.outerSize(); ++k) {
    for (Operator::InnerIterator it(d2, k); it; ++it) CHECK(it.value().is_zero());
  }
}
