#pragma once

#include <map>
#include <utility>
#include <vector>

#include "divlie/lattice.hpp"

namespace divlie {

/// Which of the three algebras a graded component is taken from:
/// the Witt algebra W_n, the divergence-zero subalgebra D_n, or the
/// extended algebra G = D_n \ltimes A_n.
enum class AlgebraKind { Witt, DivZero, Extended };

/// D(u, m) + c t^m: an element concentrated in one degree m.
///
/// The D-part need not be divergence-zero; that is a property of the element,
/// checked by is_divergence_zero().
struct HomogeneousElement {
  LatticeVector degree;
  CoefficientVector u;
  Scalar c;

  HomogeneousElement() = default;
  HomogeneousElement(LatticeVector m, CoefficientVector u_part, Scalar t_part = Scalar(0));

  static HomogeneousElement zero(const LatticeVector& m);
  /// d_i = D(e_i, 0), zero-based i.
  static HomogeneousElement d(int n, int i);
  static HomogeneousElement t(const LatticeVector& m, Scalar coeff = Scalar(1));
  static HomogeneousElement D(const CoefficientVector& u, const LatticeVector& m);
  /// D_ij(r) = r_j t^r d_i - r_i t^r d_j, zero-based i, j.
  static HomogeneousElement Dij(int i, int j, const LatticeVector& r);

  int rank() const { return static_cast<int>(degree.size()); }
  bool is_zero() const { return c.is_zero() && divlie::is_zero(u); }
  bool is_divergence_zero() const { return inner(u, degree).is_zero(); }

  HomogeneousElement& operator+=(const HomogeneousElement& o);
  HomogeneousElement& operator-=(const HomogeneousElement& o);
  HomogeneousElement& operator*=(const Scalar& a);
  friend HomogeneousElement operator+(HomogeneousElement a, const HomogeneousElement& b) { return a += b; }
  friend HomogeneousElement operator-(HomogeneousElement a, const HomogeneousElement& b) { return a -= b; }
  friend HomogeneousElement operator*(const Scalar& a, HomogeneousElement x) { return x *= a; }
  friend bool operator==(const HomogeneousElement& a, const HomogeneousElement& b);
};

/// [D(p,m) + a t^m, D(q,k) + b t^k]
///   = D((p|k) q - (q|m) p, m+k) + ((p|k) b - (q|m) a) t^{m+k}.
HomogeneousElement bracket(const HomogeneousElement& x, const HomogeneousElement& y);

/// Finite sum of homogeneous pieces in canonical form: the D-part of each
/// degree is one coefficient vector and no zero entries are stored.
class AlgebraElement {
 public:
  using DTerms = std::map<LatticeVector, CoefficientVector, LexLess>;
  using TTerms = std::map<LatticeVector, Scalar, LexLess>;

  explicit AlgebraElement(int n);
  AlgebraElement(const HomogeneousElement& h);  // NOLINT(google-explicit-constructor)

  static AlgebraElement d(int n, int i) { return HomogeneousElement::d(n, i); }
  static AlgebraElement t(const LatticeVector& m) { return HomogeneousElement::t(m); }
  static AlgebraElement D(const CoefficientVector& u, const LatticeVector& m) {
    return HomogeneousElement::D(u, m);
  }

  int rank() const { return n_; }
  const DTerms& d_terms() const { return d_; }
  const TTerms& t_terms() const { return t_; }
  bool is_zero() const { return d_.empty() && t_.empty(); }
  bool is_divergence_zero() const;

  /// Degrees carrying a nonzero piece, lexicographically.
  std::vector<LatticeVector> support() const;
  /// The piece of degree m (zero if absent).
  HomogeneousElement component(const LatticeVector& m) const;
  std::vector<HomogeneousElement> components() const;

  void add_D(const CoefficientVector& u, const LatticeVector& m);
  void add_t(const Scalar& c, const LatticeVector& m);
  void add(const HomogeneousElement& h);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& a);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& a, AlgebraElement x) { return x *= a; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void require_rank(int n) const;

  int n_;
  DTerms d_;
  TTerms t_;
};

/// Bilinear extension of the homogeneous bracket; throws RankMismatch when
/// the operands live in different ranks.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// div(D(u, r)) = (u|r) t^r, returned as the pair ((u|r), r).
std::pair<Scalar, LatticeVector> divergence(const CoefficientVector& u, const LatticeVector& r);

/// D_ij(r) as a canonical element, zero-based indices.
AlgebraElement dij(int n, int i, int j, const LatticeVector& r);

struct GradedComponent {
  LatticeVector degree;
  std::vector<HomogeneousElement> basis;

  Eigen::Index dimension() const { return static_cast<Eigen::Index>(basis.size()); }
};

/// Basis of the degree-m component. For m != 0 the divergence-zero part is
/// the rank-filtered list of D_ij(m), i < j in lexicographic order; for m = 0
/// it is d_1, ..., d_n. Extended components append t^m.
GradedComponent graded_component(AlgebraKind kind, const LatticeVector& m);

/// Coordinates of a divergence-zero D-part u at degree m != 0 in the basis
/// chosen by graded_component (one entry per basis D_ij).
CoefficientVector divergence_free_coordinates(const CoefficientVector& u, const LatticeVector& m);

/// The automorphism T_A: D(u, r) -> D(B u, A r), t^r -> t^{A r}, B = (A^T)^{-1}.
class CoordinateChange {
 public:
  /// Throws DomainError unless det A = +-1.
  explicit CoordinateChange(IntMatrix a);

  const IntMatrix& matrix() const { return a_; }
  const IntMatrix& dual() const { return b_; }

  HomogeneousElement operator()(const HomogeneousElement& x) const;
  AlgebraElement operator()(const AlgebraElement& x) const;

 private:
  IntMatrix a_;
  IntMatrix b_;
};

AlgebraElement change_coordinates(const IntMatrix& a, const AlgebraElement& x);

/// u with (u|s) != 0 and (u|r+s) = 0, built as (r_i+s_i) e_j - (r_j+s_j) e_i
/// for the first i < j with s_j r_i - s_i r_j != 0. Throws DomainError when
/// s is a rational multiple of r.
CoefficientVector find_orthogonal(const LatticeVector& r, const LatticeVector& s);

}  // namespace divlie
