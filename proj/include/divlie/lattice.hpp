#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "divlie/error.hpp"
#include "divlie/gaussian.hpp"

namespace divlie {

/// Largest supported ambient rank. Lattice and coefficient vectors keep their
/// storage inline up to this size so bracket kernels never allocate.
inline constexpr int kMaxRank = 8;

template <typename T>
using SmallVector = Eigen::Matrix<T, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxRank, 1>;

/// A point of Z^n: grading degrees, exponents of t^m.
using LatticeVector = SmallVector<std::int64_t>;

/// A vector of n exact scalars: the u in D(u, r), weights, alpha.
using CoefficientVector = SmallVector<Scalar>;

/// Dense exact vectors and matrices of arbitrary size.
template <typename T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline void check_rank(int n) {
  if (n < 2 || n > kMaxRank) {
    throw DomainError("rank " + std::to_string(n) + " outside supported range [2, " +
                      std::to_string(kMaxRank) + "]");
  }
}

inline LatticeVector lattice_zero(int n) { return LatticeVector::Zero(n); }

inline LatticeVector lattice_unit(int n, int i) {
  LatticeVector e = LatticeVector::Zero(n);
  e(i) = 1;
  return e;
}

inline LatticeVector lattice(std::initializer_list<std::int64_t> coords) {
  LatticeVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (auto c : coords) v(i++) = c;
  return v;
}

inline CoefficientVector coefficient_zero(int n) {
  CoefficientVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Scalar(0);
  return v;
}

inline CoefficientVector coefficients(std::initializer_list<Scalar> entries) {
  CoefficientVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& c : entries) v(i++) = c;
  return v;
}

inline CoefficientVector to_coefficients(const LatticeVector& m) {
  CoefficientVector v(m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) v(i) = Scalar(static_cast<long long>(m(i)));
  return v;
}

inline bool is_zero(const CoefficientVector& u) {
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (!u(i).is_zero()) return false;
  }
  return true;
}

inline bool is_zero(const LatticeVector& m) { return (m.array() == 0).all(); }

/// (u | r) = sum u_i r_i.
inline Scalar inner(const CoefficientVector& u, const LatticeVector& r) {
  Scalar acc;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (r(i) != 0) acc += u(i) * Scalar(static_cast<long long>(r(i)));
  }
  return acc;
}

inline Scalar inner(const CoefficientVector& u, const CoefficientVector& v) {
  Scalar acc;
  for (Eigen::Index i = 0; i < u.size(); ++i) acc += u(i) * v(i);
  return acc;
}

inline std::int64_t inner(const LatticeVector& a, const LatticeVector& b) { return a.dot(b); }

/// Componentwise m >= k.
inline bool dominates(const LatticeVector& m, const LatticeVector& k) {
  return (m.array() >= k.array()).all();
}

inline std::int64_t sup_norm(const LatticeVector& m) {
  return m.size() == 0 ? 0 : m.cwiseAbs().maxCoeff();
}

/// Lexicographic order; vectors of smaller rank sort first.
struct LexLess {
  bool operator()(const LatticeVector& a, const LatticeVector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  }
};

struct LatticeHash {
  std::size_t operator()(const LatticeVector& a) const noexcept {
    std::size_t h = static_cast<std::size_t>(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      h ^= std::hash<std::int64_t>{}(a(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct LatticeEqual {
  bool operator()(const LatticeVector& a, const LatticeVector& b) const {
    return a.size() == b.size() && a == b;
  }
};

inline bool equal(const CoefficientVector& a, const CoefficientVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!(a(i) == b(i))) return false;
  }
  return true;
}

std::string to_string(const LatticeVector& m);
std::string to_string(const CoefficientVector& u);

/// All points of the box [-radius, radius]^n in lexicographic order.
std::vector<LatticeVector> box(int n, std::int64_t radius);

/// All points of the box [lo, hi]^n in lexicographic order.
std::vector<LatticeVector> box(int n, std::int64_t lo, std::int64_t hi);

}  // namespace divlie
