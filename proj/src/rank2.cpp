#include "divlie/rank2.hpp"

#include <algorithm>
#include <cmath>

namespace divlie {

namespace {

void require_rank2(const LatticeVector& r) {
  if (r.size() != 2) throw RankMismatch("rank-2 helper called with rank " + std::to_string(r.size()));
}

int sgn(const mpz_class& x) { return mpz_sgn(x.get_mpz_t()); }

}  // namespace

LatticeVector rank2_bar(const LatticeVector& r) {
  require_rank2(r);
  return LatticeVector{{r(1), -r(0)}};
}

AlgebraElement rank2_d(const LatticeVector& b) {
  const LatticeVector bar = rank2_bar(b);
  CoefficientVector u(2);
  u << Scalar(static_cast<long long>(bar(0))), Scalar(static_cast<long long>(bar(1)));
  return AlgebraElement::D(u, b);
}

QuadraticIrrational::QuadraticIrrational(mpz_class a, mpz_class b, mpz_class d, mpz_class q)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), q_(std::move(q)) {
  if (q_ == 0) throw DomainError("alpha denominator is zero");
  if (d_ <= 0) throw DomainError("alpha needs d > 0");
  if (b_ == 0 || mpz_perfect_square_p(d_.get_mpz_t())) {
    throw DomainError("alpha is rational; the order is not total on the line p alpha + q = 0");
  }
  if (sign(1, 0) <= 0) throw DomainError("alpha must be positive");
}

int QuadraticIrrational::sign(const mpz_class& x, const mpz_class& y) const {
  // x alpha + y = (X + Y sqrt d) / q with X = x a + y q, Y = x b
  const mpz_class big_x = x * a_ + y * q_;
  const mpz_class big_y = x * b_;
  int s;
  const int sx = sgn(big_x);
  const int sy = sgn(big_y);
  if (sx == 0 || sy == 0 || sx == sy) {
    s = sx != 0 ? sx : sy;
  } else {
    const mpz_class lhs = big_x * big_x;
    const mpz_class rhs = big_y * big_y * d_;
    s = lhs > rhs ? sx : sy;  // equality impossible for irrational sqrt d
  }
  return sgn(q_) * s;
}

double QuadraticIrrational::approx() const {
  return (a_.get_d() + b_.get_d() * std::sqrt(d_.get_d())) / q_.get_d();
}

HalfPlanes alpha_halfplane(const QuadraticIrrational& alpha, std::int64_t radius) {
  if (radius < 0) throw WindowError("half-plane window radius must be non-negative");
  HalfPlanes out;
  for (const auto& v : box(2, radius)) {
    const int s = alpha.sign(mpz_class(static_cast<long>(v(0))), mpz_class(static_cast<long>(v(1))));
    if (s > 0) out.positive.push_back(v);
    if (s < 0) out.negative.push_back(v);
  }
  return out;
}

bool alpha_greater(const QuadraticIrrational& alpha, const LatticeVector& x, const LatticeVector& y) {
  require_rank2(x);
  require_rank2(y);
  const LatticeVector d = x - y;
  return alpha.sign(mpz_class(static_cast<long>(d(0))), mpz_class(static_cast<long>(d(1)))) > 0;
}

std::optional<LatticeVector> alpha_between(const QuadraticIrrational& alpha, const LatticeVector& x,
                                           std::int64_t radius) {
  const LatticeVector zero = lattice_zero(2);
  if (!alpha_greater(alpha, x, zero)) throw DomainError(to_string(x) + " is not in Z^2(+)");
  auto candidates = box(2, radius);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const LatticeVector& a, const LatticeVector& b) { return sup_norm(a) < sup_norm(b); });
  for (const auto& v : candidates) {
    if (alpha_greater(alpha, v, zero) && alpha_greater(alpha, x, v)) return v;
  }
  return std::nullopt;
}

}  // namespace divlie
