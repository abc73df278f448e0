#include "divlie/linalg.hpp"

namespace divlie {
namespace {

Matrix<Rational> to_rational(const IntMatrix& a) {
  Matrix<Rational> out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = Rational(static_cast<long long>(a(i, j)));
  }
  return out;
}

}  // namespace

Rational integer_determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  return determinant(to_rational(a));
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const Eigen::Index n = a.rows();
  Rational det = integer_determinant(a);
  if (!(det == Rational(1)) && !(det == Rational(-1))) {
    throw DomainError("matrix is not unimodular (determinant " + det.str() + ")");
  }
  Matrix<Rational> aug(n, 2 * n);
  aug.leftCols(n) = to_rational(a);
  aug.rightCols(n).setZero();
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = Rational(1);
  auto e = echelon(aug);
  IntMatrix inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Rational& v = e.rref(i, n + j);
      // the inverse of a unimodular matrix is integral
      inv(i, j) = v.numerator().get_si();
    }
  }
  return inv;
}

}  // namespace divlie
