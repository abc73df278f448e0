#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divlie/algebra.hpp"
#include "divlie/jet.hpp"
#include "divlie/linalg.hpp"

namespace divlie {

enum class ActStatus {
  Ok,           // value holds the image in the target weight space
  KnownZero,    // the image is zero for structural reasons
  OutOfWindow,  // the image is not determined by the truncated data
};

struct ActResult {
  ActStatus status = ActStatus::KnownZero;
  LatticeVector weight;
  Vector<Scalar> value;
};

/// A weight module known on finitely many weight spaces. Weights are
/// base_weight() + w for lattice offsets w; each weight space carries a fixed
/// basis and homogeneous elements of G act through act().
class WeightModule {
 public:
  virtual ~WeightModule() = default;

  virtual int rank() const = 0;
  virtual CoefficientVector base_weight() const = 0;
  /// Offsets with a nonzero weight space, lexicographically.
  virtual std::vector<LatticeVector> weights() const = 0;
  virtual Eigen::Index dim(const LatticeVector& weight) const = 0;
  /// Generator degrees worth trying lie in [-radius, radius]^n.
  virtual std::int64_t generator_radius() const = 0;
  virtual ActResult act(const HomogeneousElement& x, const LatticeVector& weight,
                        const Vector<Scalar>& v) const = 0;
};

/// A jet module restricted to the degrees [-radius, radius]^n; images that
/// leave the box are reported OutOfWindow.
class JetWindowModule : public WeightModule {
 public:
  JetWindowModule(const JetModule& module, std::int64_t radius);

  int rank() const override { return module_->rank(); }
  CoefficientVector base_weight() const override { return module_->params().alpha; }
  std::vector<LatticeVector> weights() const override { return box(rank(), radius_); }
  Eigen::Index dim(const LatticeVector& weight) const override;
  std::int64_t generator_radius() const override { return 2 * radius_; }
  ActResult act(const HomogeneousElement& x, const LatticeVector& weight,
                const Vector<Scalar>& v) const override;

  const JetModule& module() const { return *module_; }
  std::int64_t radius() const { return radius_; }

 private:
  const JetModule* module_;
  std::int64_t radius_;
};

struct GhwVector {
  LatticeVector weight;
  Vector<Scalar> vector;
};

struct GhwScan {
  int k = 0;
  std::vector<GhwVector> vectors;
  std::size_t tested_weights = 0;
  std::size_t untested_weights = 0;
  bool window_limited = true;
};

/// Weight vectors killed by every basis element of G_m, m >= (k,...,k) with
/// |m| <= generator_radius(), found as exact kernels per weight space.
/// Generators whose image is OutOfWindow on some basis vector are skipped;
/// weights with no testable generator are counted as untested. Throws
/// WindowError when the module is nonzero but no weight is testable.
GhwScan detect_ghw_vectors(const WeightModule& module, int k);

/// Dimensions of the span of v under repeated generator application, kept
/// inside the module's window.
std::map<LatticeVector, Eigen::Index, LexLess> cyclic_span_window(const WeightModule& module,
                                                                  const LatticeVector& weight,
                                                                  const Vector<Scalar>& v);

enum class Classification { CuspidalConsistent, GHW, Inconclusive };

std::string to_string(Classification c);

struct ClassifyResult {
  Classification verdict = Classification::Inconclusive;
  std::optional<int> ghw_k;
  std::size_t ghw_vectors = 0;
  Eigen::Index max_multiplicity = 0;
  std::vector<std::string> notes;
  bool window_limited = true;
};

/// GHW when detect_ghw_vectors finds vectors for some k in
/// 1..generator_radius(); CuspidalConsistent when none is found and every
/// multiplicity is at most bound; Inconclusive otherwise.
ClassifyResult classify_truncated(const WeightModule& module, Eigen::Index bound);

}  // namespace divlie
