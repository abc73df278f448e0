#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

#include "divlie/lattice.hpp"

namespace divlie {

/// Dominant integral sl_n weight in the fundamental-weight basis:
/// lambda = sum_k marks[k-1] omega_k.
struct SlWeight {
  std::vector<int> marks;

  static SlWeight zero(int n) { return SlWeight{std::vector<int>(static_cast<std::size_t>(n - 1), 0)}; }
  /// omega_k, 1 <= k <= n-1.
  static SlWeight fundamental(int n, int k);

  int rank() const { return static_cast<int>(marks.size()) + 1; }
  bool is_zero() const;
  /// Number of boxes of the Young diagram, sum_k k * marks[k-1].
  int boxes() const;
  /// Partition form lambda_1 >= ... >= lambda_n = 0.
  std::vector<int> partition() const;
  std::string str() const;

  friend bool operator==(const SlWeight&, const SlWeight&) = default;
};

/// Weyl dimension formula, exact.
std::uint64_t weyl_dim(const SlWeight& lambda);

using Operator = Eigen::SparseMatrix<Scalar>;
using RationalOperator = Eigen::SparseMatrix<Rational>;
using SparseColumn = std::vector<std::pair<Eigen::Index, Scalar>>;

/// Finite-dimensional gl_n module V(lambda, c) stored as exact operator
/// tables for every E_ij.
///
/// Basis vectors carry integral gl_n weights inherited from the tensor
/// construction; E_ii acts on basis vector b by gl_weights()[b](i) plus the
/// central shift (c - boxes) / n, so sum_i E_ii = c.
class Irrep {
 public:
  Irrep(SlWeight lambda, Scalar c, std::vector<LatticeVector> gl_weights,
        std::vector<RationalOperator> off_diagonal);

  int rank() const { return n_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(weights_.size()); }
  const SlWeight& highest_weight() const { return lambda_; }
  const Scalar& central_scalar() const { return c_; }
  /// Index of the highest-weight vector.
  Eigen::Index highest_vector() const { return 0; }

  const std::vector<LatticeVector>& gl_weights() const { return weights_; }
  /// lambda(h_i) on basis vector b, h_i = E_ii - E_{i+1,i+1}.
  std::vector<std::int64_t> h_weight(Eigen::Index b) const;
  /// Eigenvalue of E_ii on basis vector b.
  Scalar diagonal(int i, Eigen::Index b) const;

  /// E_ij as a sparse matrix, zero-based indices (diagonal included).
  const Operator& E(int i, int j) const { return ops_[static_cast<std::size_t>(i * n_ + j)]; }
  /// Off-diagonal E_ij over the rationals (zero matrix on the diagonal).
  const RationalOperator& E_rational(int i, int j) const {
    return rational_ops_[static_cast<std::size_t>(i * n_ + j)];
  }

  /// Column b of sum_{ij} M_ij E_ij, sorted by row.
  SparseColumn apply(const Matrix<Scalar>& m, Eigen::Index b) const;

 private:
  int n_;
  SlWeight lambda_;
  Scalar c_;
  Scalar shift_;
  std::vector<LatticeVector> weights_;
  std::vector<RationalOperator> rational_ops_;
  std::vector<Operator> ops_;
};

/// Lambda^k C^n with basis the k-subsets of {1..n} in lexicographic order;
/// the identity acts by k.
Irrep fundamental_irrep(int n, int k);

struct IrrepOptions {
  std::uint64_t max_dim = 5000;
};

/// V(lambda, c): the cyclic subspace generated by the product of highest
/// vectors inside V(lambda - omega_k) (x) Lambda^k C^n, built one fundamental
/// factor at a time with breadth-first lowering words E_{j+1,j} and exact
/// rank filtering per weight space.
Irrep build_irrep(const SlWeight& lambda, const Scalar& c, const IrrepOptions& options = {});

/// sum_{ij} r_i u_j E_ij; traceless when (u|r) = 0.
Operator matrix_of_rank_one(const LatticeVector& r, const CoefficientVector& u, const Irrep& irrep);

/// Violations of [E_ij, E_kl] = delta_jk E_il - delta_li E_kj, of
/// sum_i E_ii = c I, and of the highest-weight conditions.
std::vector<std::string> check_gl_relations(const Irrep& irrep);

}  // namespace divlie
