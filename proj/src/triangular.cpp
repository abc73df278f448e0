#include "divlie/triangular.hpp"

#include <numeric>

#include "divlie/linalg.hpp"

namespace divlie {

TriangularData::TriangularData(std::vector<LatticeVector> m_basis, LatticeVector beta)
    : m_basis_(std::move(m_basis)), beta_(std::move(beta)) {
  const int n = static_cast<int>(beta_.size());
  check_rank(n);
  if (static_cast<int>(m_basis_.size()) != n - 1) {
    throw DomainError("M needs " + std::to_string(n - 1) + " basis vectors, got " +
                      std::to_string(m_basis_.size()));
  }
  p_.resize(n, n);
  for (int j = 0; j < n - 1; ++j) {
    if (m_basis_[static_cast<std::size_t>(j)].size() != n) throw RankMismatch("M basis vector has the wrong rank");
    p_.col(j) = m_basis_[static_cast<std::size_t>(j)];
  }
  p_.col(n - 1) = beta_;
  p_inv_ = unimodular_inverse(p_);
}

std::int64_t TriangularData::level(const LatticeVector& m) const {
  if (m.size() != rank()) throw RankMismatch("degree rank does not match the decomposition");
  return p_inv_.row(rank() - 1).dot(m);
}

LatticeVector TriangularData::m_coords(const LatticeVector& m) const {
  if (m.size() != rank()) throw RankMismatch("degree rank does not match the decomposition");
  const int n = rank();
  LatticeVector out(n - 1);
  for (int i = 0; i < n - 1; ++i) out(i) = p_inv_.row(i).dot(m);
  return out;
}

LatticeVector TriangularData::m_part(const LatticeVector& m) const { return m - level(m) * beta_; }

LatticeVector TriangularData::compose(const LatticeVector& a, std::int64_t r) const {
  LatticeVector out = r * beta_;
  for (Eigen::Index i = 0; i < a.size(); ++i) out += a(i) * m_basis_[static_cast<std::size_t>(i)];
  return out;
}

TriangularData make_triangular(std::vector<LatticeVector> m_basis, LatticeVector beta) {
  return TriangularData(std::move(m_basis), std::move(beta));
}

TriangularData triangular_from_orthogonal(const LatticeVector& k) {
  const int n = static_cast<int>(k.size());
  check_rank(n);
  std::int64_t g = 0;
  for (int i = 0; i < n; ++i) g = std::gcd(g, k(i));
  if (g != 1) throw DomainError("coordinates of " + to_string(k) + " are not relatively prime");

  // Column operations on the row vector k^T, mirrored on U, until
  // k^T U = (1, 0, ..., 0).
  LatticeVector v = k;
  IntMatrix u = IntMatrix::Identity(n, n);
  while (true) {
    int pivot = -1;
    int nonzero = 0;
    for (int i = 0; i < n; ++i) {
      if (v(i) == 0) continue;
      ++nonzero;
      if (pivot < 0 || std::abs(v(i)) < std::abs(v(pivot))) pivot = i;
    }
    if (nonzero == 1) {
      if (pivot != 0) {
        u.col(0).swap(u.col(pivot));
        std::swap(v(0), v(pivot));
      }
      if (v(0) < 0) {
        u.col(0) = -u.col(0);
        v(0) = -v(0);
      }
      break;
    }
    for (int j = 0; j < n; ++j) {
      if (j == pivot || v(j) == 0) continue;
      const std::int64_t q = v(j) / v(pivot);
      v(j) -= q * v(pivot);
      u.col(j) -= q * u.col(pivot);
    }
  }
  std::vector<LatticeVector> m_basis;
  for (int j = 1; j < n; ++j) {
    LatticeVector m = u.col(j);
    int first = 0;
    while (first < n && m(first) == 0) ++first;
    if (first < n && m(first) < 0) m = -m;
    m_basis.push_back(m);
  }
  return TriangularData(std::move(m_basis), u.col(0));
}

}  // namespace divlie
