#pragma once

#include <vector>

#include "divlie/lattice.hpp"

namespace divlie {

/// Z^n = M (+) Z beta with M spanned by mBasis; [mBasis | beta] is unimodular.
class TriangularData {
 public:
  TriangularData(std::vector<LatticeVector> m_basis, LatticeVector beta);

  int rank() const { return static_cast<int>(beta_.size()); }
  const std::vector<LatticeVector>& m_basis() const { return m_basis_; }
  const LatticeVector& beta() const { return beta_; }
  /// The columns m_1, ..., m_{n-1}, beta.
  const IntMatrix& matrix() const { return p_; }

  /// beta-coordinate of m.
  std::int64_t level(const LatticeVector& m) const;
  /// Coordinates of m - level(m) beta in mBasis.
  LatticeVector m_coords(const LatticeVector& m) const;
  /// m - level(m) beta.
  LatticeVector m_part(const LatticeVector& m) const;
  /// sum_i a_i m_i + r beta.
  LatticeVector compose(const LatticeVector& a, std::int64_t r) const;

 private:
  std::vector<LatticeVector> m_basis_;
  LatticeVector beta_;
  IntMatrix p_;
  IntMatrix p_inv_;
};

/// Validates unimodularity; throws DomainError otherwise.
TriangularData make_triangular(std::vector<LatticeVector> m_basis, LatticeVector beta);

/// M = {l : (k|l) = 0} and beta with (k|beta) = 1, via extended-gcd column
/// operations. Throws DomainError unless gcd(k) = 1.
TriangularData triangular_from_orthogonal(const LatticeVector& k);

}  // namespace divlie
