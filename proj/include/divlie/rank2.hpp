#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "divlie/algebra.hpp"

namespace divlie {

/// r-bar = (r_2, -r_1); throws RankMismatch unless n = 2.
LatticeVector rank2_bar(const LatticeVector& r);

/// d(b) = D(b-bar, b), divergence-zero; d(0) = 0.
AlgebraElement rank2_d(const LatticeVector& b);

/// alpha = (a + b sqrt(d)) / q with sqrt(d) irrational and alpha > 0.
class QuadraticIrrational {
 public:
  /// Throws DomainError when alpha is rational (b = 0 or d a perfect square),
  /// q = 0, d <= 0, or alpha <= 0.
  QuadraticIrrational(mpz_class a, mpz_class b, mpz_class d, mpz_class q);

  static QuadraticIrrational sqrt(const mpz_class& d) { return {0, 1, d, 1}; }

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& d() const { return d_; }
  const mpz_class& q() const { return q_; }

  /// Exact sign of x alpha + y, in {-1, 0, 1}; 0 only for x = y = 0.
  int sign(const mpz_class& x, const mpz_class& y) const;
  /// Floating-point approximation for display only.
  double approx() const;

 private:
  mpz_class a_;
  mpz_class b_;
  mpz_class d_;
  mpz_class q_;
};

/// Z^2(+) and Z^2(-) inside [-radius, radius]^2 (origin excluded), split by
/// the sign of p alpha + q; lists are in lexicographic order.
struct HalfPlanes {
  std::vector<LatticeVector> positive;
  std::vector<LatticeVector> negative;
};

HalfPlanes alpha_halfplane(const QuadraticIrrational& alpha, std::int64_t radius);

/// (p, q) >_alpha (r, s).
bool alpha_greater(const QuadraticIrrational& alpha, const LatticeVector& x, const LatticeVector& y);

/// Some (r, s) with (0,0) <_alpha (r, s) <_alpha x inside [-radius, radius]^2,
/// smallest sup-norm first, then lexicographic; nullopt when the box has none.
/// Throws DomainError unless x is in Z^2(+).
std::optional<LatticeVector> alpha_between(const QuadraticIrrational& alpha, const LatticeVector& x,
                                           std::int64_t radius);

}  // namespace divlie
