#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "divlie/algebra.hpp"
#include "divlie/irrep.hpp"

namespace divlie {

/// Parameters of F^alpha(lambda, c, e) and V(lambda, alpha, e).
struct JetParams {
  SlWeight lambda;
  Scalar c;
  CoefficientVector alpha;
  Scalar e;

  int rank() const { return lambda.rank(); }
};

/// Key of a basis vector v_b (x) t^s; ordered by degree, then irrep index.
struct JetKey {
  LatticeVector degree;
  Eigen::Index index = 0;
};

struct JetKeyLess {
  bool operator()(const JetKey& a, const JetKey& b) const {
    if (!(a.degree == b.degree)) return LexLess{}(a.degree, b.degree);
    return a.index < b.index;
  }
};

/// Finite combination of v_b (x) t^s with no stored zero coefficients.
class JetVector {
 public:
  using Terms = std::map<JetKey, Scalar, JetKeyLess>;

  JetVector() = default;
  static JetVector basis(Eigen::Index index, const LatticeVector& degree);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const JetKey& key, const Scalar& coeff);

  JetVector& operator+=(const JetVector& o);
  JetVector& operator-=(const JetVector& o);
  JetVector& operator*=(const Scalar& a);
  friend JetVector operator+(JetVector a, const JetVector& b) { return a += b; }
  friend JetVector operator-(JetVector a, const JetVector& b) { return a -= b; }
  friend JetVector operator*(const Scalar& a, JetVector x) { return x *= a; }
  friend bool operator==(const JetVector& a, const JetVector& b);

  std::string str() const;

 private:
  Terms terms_;
};

/// Which algebra acts: W_n \ltimes A_n (any D-part) or G = D_n \ltimes A_n
/// (D-parts must be divergence-zero).
enum class JetMode { WittExtended, Extended };

/// The module V(lambda, c) (x) C[t^{+-1}] with the action
///   D(u,r)(v (x) t^s) = (u|s+alpha) v (x) t^{r+s} + ((r u^T).v) (x) t^{r+s},
///   t^r (v (x) t^s) = e v (x) t^{r+s}.
class JetModule {
 public:
  JetModule(JetParams params, JetMode mode = JetMode::Extended, const IrrepOptions& options = {});

  const JetParams& params() const { return params_; }
  const Irrep& irrep() const { return irrep_; }
  JetMode mode() const { return mode_; }
  int rank() const { return params_.rank(); }
  Eigen::Index fiber_dim() const { return irrep_.dim(); }

  JetVector act(const HomogeneousElement& x, const JetVector& w) const;
  JetVector act(const AlgebraElement& x, const JetVector& w) const;

  /// D_ij(r) through the specialised divergence-zero display: scalar
  /// r_j(s_i+alpha_i) - r_i(s_j+alpha_j) and matrix part
  /// r_j sum_{k!=i} r_k E_ki - r_i sum_{k!=j} r_k E_kj + r_i r_j (E_ii - E_jj).
  JetVector act_dij(int i, int j, const LatticeVector& r, const JetVector& w) const;

 private:
  void act_into(const HomogeneousElement& x, const JetKey& key, const Scalar& coeff, JetVector& out) const;

  JetParams params_;
  JetMode mode_;
  Irrep irrep_;
};

/// One failed identity with a human-readable witness.
struct Violation {
  std::string witness;
};

struct CheckReport {
  std::string check;
  std::size_t cases = 0;
  std::vector<Violation> violations;
  /// "for all" statements are certified only inside the declared window.
  bool window_limited = true;

  bool passed() const { return violations.empty(); }
};

/// Homogeneous basis of the acting algebra in degrees of [-radius, radius]^n.
std::vector<HomogeneousElement> acting_basis(JetMode mode, int n, std::int64_t radius);

/// act([x,y], w) = x(y w) - y(x w) for basis x, y with degrees in the window
/// and all v_b (x) t^s with s in the window.
CheckReport check_module_axiom(const JetModule& module, std::int64_t radius);

/// t^r (t^s w) = e t^{r+s} w for r, s, w in the window.
CheckReport check_associativity(const JetModule& module, std::int64_t radius);

/// Generic D(u,r) action against the D_ij display for every D_ij(r) in the
/// window and every basis vector with degree in the window.
CheckReport check_two_formulas(const JetModule& module, std::int64_t radius);

enum class Irreducibility { Irreducible, Reducible, Unknown };

std::string to_string(Irreducibility v);

struct IrreducibilityVerdict {
  Irreducibility verdict = Irreducibility::Unknown;
  std::vector<std::string> notes;
};

/// WittExtended mode applies the criterion for F^alpha(lambda, c) (the A_n
/// action is ignored): irreducible iff (lambda,c,alpha) not in
/// {0} x {0,n} x Z^n and (lambda,c) != (omega_k, k) for 1 <= k <= n-1.
/// Extended mode: e != 0 gives Irreducible, e = 0 gives Unknown.
IrreducibilityVerdict is_irreducible(const JetParams& params, JetMode mode);

/// Weight data over a finite window of lattice offsets.
struct WeightSupport {
  CoefficientVector base;
  std::vector<LatticeVector> present;
  std::map<LatticeVector, std::int64_t, LexLess> multiplicity;
};

/// Weights of a jet module in [-radius, radius]^n: weight alpha + s with
/// multiplicity dim V(lambda).
WeightSupport weight_support(const JetModule& module, std::int64_t radius);

/// True when every entry of alpha is a rational integer.
bool is_integral(const CoefficientVector& alpha);

}  // namespace divlie
