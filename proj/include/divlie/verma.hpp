#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "divlie/jet.hpp"
#include "divlie/triangular.hpp"
#include "divlie/weight_module.hpp"

namespace divlie {

/// The G_M-module X a Verma module is induced from.
///
/// Character: one vector of weight lambda0 on which d_i acts by lambda0_i,
/// t^0 by c0 and every G_m, m != 0, by zero.
/// JetRestriction: X = sum_{m in M} V_{mu+m} inside the jet module with
/// parameters jet, mu = alpha + s0, kept for M-coordinates in
/// [-x_window, x_window]^{n-1}.
struct InducingModule {
  enum class Kind { Character, JetRestriction };

  Kind kind = Kind::Character;
  CoefficientVector lambda0;
  Scalar c0;
  std::optional<JetParams> jet;
  LatticeVector s0;
  std::int64_t x_window = 0;

  static InducingModule character(CoefficientVector lambda0, Scalar c0);
  static InducingModule jet_restriction(JetParams params, LatticeVector s0, std::int64_t x_window);

  int rank() const;
};

/// Straightening terms that were dropped because a factor or an X-vector
/// left the window, keyed by description.
struct LeakageLedger {
  std::map<std::string, std::size_t> entries;

  bool empty() const { return entries.empty(); }
  std::size_t total() const;
};

struct SingularSpace {
  LatticeVector weight;
  Matrix<Scalar> basis;  // columns in the weight-space basis
  bool unreliable = false;
};

struct SingularReport {
  int level = 0;
  std::vector<SingularSpace> spaces;
  bool window_unreliable = false;

  std::size_t total_dim() const;
};

class VermaEngine;

/// Truncated generalized Verma module M(X, beta, M), or its quotient by a
/// windowed approximation of the maximal submodule.
///
/// Basis: PBW monomials g_1 ... g_k x with g_1 <= ... <= g_k in the generator
/// order (level-major, then M-coordinates lexicographically, then the D-basis
/// before t), factors of level -1..-D with M-coordinates in [-W, W]^{n-1},
/// total level at most D, x an X-basis vector. Weights are offsets from
/// base_weight().
class TruncatedModule : public WeightModule {
 public:
  int rank() const override;
  CoefficientVector base_weight() const override;
  std::vector<LatticeVector> weights() const override;
  Eigen::Index dim(const LatticeVector& weight) const override;
  std::int64_t generator_radius() const override;
  ActResult act(const HomogeneousElement& x, const LatticeVector& weight,
                const Vector<Scalar>& v) const override;

  const TriangularData& triangular() const;
  const InducingModule& inducing() const;
  int depth() const;
  std::int64_t window() const;
  bool is_quotient() const { return static_cast<bool>(submodule_); }

  /// Level of a weight offset; all weights have level in [-D, 0].
  std::int64_t level(const LatticeVector& weight) const;
  /// Weight offsets of X with their dimensions.
  std::map<LatticeVector, Eigen::Index, LexLess> x_weights() const;
  std::map<LatticeVector, Eigen::Index, LexLess> weight_table() const;

  /// Basis vectors of a weight space, as PBW words.
  std::vector<std::string> basis_labels(const LatticeVector& weight) const;

  const LeakageLedger& ledger() const;
  bool window_unreliable() const { return unreliable_ || !ledger().empty(); }
  const std::vector<std::string>& notes() const { return notes_; }

  /// Action in the underlying Verma module, ignoring any quotient; leaked is
  /// set when straightening dropped terms outside the window.
  ActResult act_full(const HomogeneousElement& x, const LatticeVector& weight, const Vector<Scalar>& v,
                     bool& leaked) const;

 private:
  friend TruncatedModule build_verma(const InducingModule&, const TriangularData&, int, std::int64_t);
  friend TruncatedModule irreducible_quotient(const TruncatedModule&);
  friend SingularReport find_singular_vectors(const TruncatedModule&, int);
  friend class VermaEngine;

  struct Submodule {
    std::map<LatticeVector, Subspace<Scalar>, LexLess> spaces;
  };

  std::shared_ptr<VermaEngine> engine_;
  std::shared_ptr<const Submodule> submodule_;
  bool unreliable_ = false;
  std::vector<std::string> notes_;
};

/// Builds the truncated module; throws DomainError for depth < 0 or W < 1.
TruncatedModule build_verma(const InducingModule& x, const TriangularData& tri, int depth, std::int64_t window);

/// Kernel, per weight space at level -level, of the stacked raising maps of
/// levels 1..level whose targets are representable in the window.
SingularReport find_singular_vectors(const TruncatedModule& module, int level);

/// Quotient by the submodule found level by level: at level l the vectors
/// sent into the submodule (zero at level 0) by every representable raising
/// map of level 1..l, then closed under in-window generators. Leaked images
/// are never added.
TruncatedModule irreducible_quotient(const TruncatedModule& module);

/// Support law P(L) within P(X) and (mu - N beta + M), and L meets X
/// trivially; returns violations.
std::vector<std::string> check_support_law(const TruncatedModule& quotient);

/// act([x,y], w) = x(y w) - y(x w) for basis x, y of degrees with level in
/// [-1, 1] and M-coordinates in [-radius, radius], w every basis vector;
/// triples touched by leakage are skipped and counted.
struct PbwCheck {
  CheckReport report;
  std::size_t skipped = 0;
};
PbwCheck check_pbw_consistency(const TruncatedModule& module, std::int64_t radius);

}  // namespace divlie
