#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "divlie/lattice.hpp"

// Exact linear algebra over an exact field T (Rational or Scalar).
//
// Eigen supplies storage and expression arithmetic; elimination is done here
// with first-nonzero pivoting since there is no rounding to control.

namespace divlie {

template <typename T>
struct Echelon {
  Matrix<T> rref;                      // rank() rows, reduced row echelon form
  std::vector<Eigen::Index> pivots;    // pivot column of each row
  Eigen::Index cols = 0;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> echelon(const Eigen::MatrixBase<Derived>& input) {
  using T = typename Derived::Scalar;
  Matrix<T> a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Echelon<T> out;
  out.cols = cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    T inv = T(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      T f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = a.topRows(r);
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  return echelon(a).rank();
}

/// Basis of the right kernel {x : A x = 0}, one column per free variable.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& a) {
  using T = typename Derived::Scalar;
  auto e = echelon(a);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  }
  Matrix<T> out = Matrix<T>::Zero(cols, static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Eigen::Index f = free[k];
    out(f, static_cast<Eigen::Index>(k)) = T(1);
    for (Eigen::Index r = 0; r < e.rank(); ++r) {
      out(e.pivots[static_cast<std::size_t>(r)], static_cast<Eigen::Index>(k)) = -e.rref(r, f);
    }
  }
  return out;
}

/// Exact determinant of a square matrix.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using T = typename Derived::Scalar;
  Matrix<T> a = input;
  const Eigen::Index n = a.rows();
  T det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return T(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    T inv = T(1) / a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      T f = a(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Solves A x = b; nullopt when inconsistent. Free variables are set to zero.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
  using T = typename DerivedA::Scalar;
  Matrix<T> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto e = echelon(aug);
  Vector<T> x = Vector<T>::Zero(a.cols());
  for (Eigen::Index r = 0; r < e.rank(); ++r) {
    const Eigen::Index p = e.pivots[static_cast<std::size_t>(r)];
    if (p == a.cols()) return std::nullopt;
    x(p) = e.rref(r, a.cols());
  }
  return x;
}

/// Incrementally built subspace of T^ambient kept in reduced echelon form.
///
/// Accepted generators are numbered in insertion order; coordinates() expresses
/// a vector of the span in terms of them.
template <typename T>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Eigen::Index ambient) : ambient_(ambient) {}

  Eigen::Index ambient() const { return ambient_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(rows_.size()); }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }
  const std::vector<Vector<T>>& rows() const { return rows_; }

  /// v minus its projection along pivots: zero iff v lies in the span.
  Vector<T> reduce(Vector<T> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T f = v(pivots_[k]);
      if (f.is_zero()) continue;
      axpy(v, -f, rows_[k]);
    }
    return v;
  }

  bool contains(const Vector<T>& v) const { return is_zero_vector(reduce(v)); }

  /// Adds v; returns false when v was already in the span.
  bool insert(const Vector<T>& v) {
    Vector<T> r = v;
    Vector<T> combo = Vector<T>::Zero(generators_ + 1);
    combo(generators_) = T(1);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T f = r(pivots_[k]);
      if (f.is_zero()) continue;
      axpy(r, -f, rows_[k]);
      axpy_prefix(combo, -f, combos_[k]);
    }
    Eigen::Index p = 0;
    while (p < r.size() && r(p).is_zero()) ++p;
    if (p == r.size()) return false;
    const T inv = T(1) / r(p);
    scale(r, inv);
    scale(combo, inv);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T f = rows_[k](p);
      if (f.is_zero()) continue;
      axpy(rows_[k], -f, r);
      combos_[k].conservativeResize(generators_ + 1);
      combos_[k](generators_) = T(0);
      axpy(combos_[k], -f, combo);
    }
    rows_.push_back(std::move(r));
    combos_.push_back(std::move(combo));
    pivots_.push_back(p);
    ++generators_;
    return true;
  }

  /// Coordinates of v with respect to the accepted generators, or nullopt
  /// when v is outside the span.
  std::optional<Vector<T>> coordinates(const Vector<T>& v) const {
    Vector<T> r = v;
    Vector<T> c = Vector<T>::Zero(generators_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T f = r(pivots_[k]);
      if (f.is_zero()) continue;
      axpy(r, -f, rows_[k]);
      axpy_prefix(c, f, combos_[k]);
    }
    if (!is_zero_vector(r)) return std::nullopt;
    return c;
  }

  /// Columns that are not pivots; their unit vectors span a complement.
  std::vector<Eigen::Index> free_columns() const {
    std::vector<bool> used(static_cast<std::size_t>(ambient_), false);
    for (auto p : pivots_) used[static_cast<std::size_t>(p)] = true;
    std::vector<Eigen::Index> out;
    for (Eigen::Index c = 0; c < ambient_; ++c) {
      if (!used[static_cast<std::size_t>(c)]) out.push_back(c);
    }
    return out;
  }

  static bool is_zero_vector(const Vector<T>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (!v(i).is_zero()) return false;
    }
    return true;
  }

 private:
  static void axpy(Vector<T>& y, const T& a, const Vector<T>& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (!x(i).is_zero()) y(i) += a * x(i);
    }
  }
  // y[0..x.size()) += a * x, with y at least as long as x.
  static void axpy_prefix(Vector<T>& y, const T& a, const Vector<T>& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (!x(i).is_zero()) y(i) += a * x(i);
    }
  }
  static void scale(Vector<T>& y, const T& a) {
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      if (!y(i).is_zero()) y(i) *= a;
    }
  }

  Eigen::Index ambient_ = 0;
  Eigen::Index generators_ = 0;
  std::vector<Vector<T>> rows_;
  std::vector<Vector<T>> combos_;
  std::vector<Eigen::Index> pivots_;
};

/// Exact determinant of an integer matrix.
Rational integer_determinant(const IntMatrix& a);

/// Inverse of a unimodular integer matrix; throws DomainError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace divlie
