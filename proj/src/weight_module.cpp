#include "divlie/weight_module.hpp"

#include <deque>

namespace divlie {

JetWindowModule::JetWindowModule(const JetModule& module, std::int64_t radius)
    : module_(&module), radius_(radius) {
  if (radius < 0) throw WindowError("window radius must be non-negative");
}

Eigen::Index JetWindowModule::dim(const LatticeVector& weight) const {
  return sup_norm(weight) <= radius_ ? module_->fiber_dim() : 0;
}

ActResult JetWindowModule::act(const HomogeneousElement& x, const LatticeVector& weight,
                               const Vector<Scalar>& v) const {
  ActResult out;
  out.weight = weight + x.degree;
  if (sup_norm(out.weight) > radius_) {
    out.status = ActStatus::OutOfWindow;
    return out;
  }
  JetVector w;
  for (Eigen::Index b = 0; b < v.size(); ++b) w.add(JetKey{weight, b}, v(b));
  JetVector image = module_->act(x, w);
  out.value = Vector<Scalar>::Zero(module_->fiber_dim());
  for (const auto& [key, c] : image.terms()) out.value(key.index) = c;
  out.status = ActStatus::Ok;
  return out;
}

namespace {

std::vector<HomogeneousElement> generators(int n, std::int64_t radius) {
  std::vector<HomogeneousElement> out;
  for (const auto& m : box(n, radius)) {
    for (auto& h : graded_component(AlgebraKind::Extended, m).basis) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

GhwScan detect_ghw_vectors(const WeightModule& module, int k) {
  if (k < 1) throw DomainError("GHW cone parameter k must be positive");
  GhwScan scan;
  scan.k = k;
  const auto weights = module.weights();
  if (weights.empty()) return scan;
  const int n = module.rank();
  std::vector<HomogeneousElement> cone;
  for (const auto& m : box(n, module.generator_radius())) {
    if (!dominates(m, LatticeVector::Constant(n, k))) continue;
    for (auto& h : graded_component(AlgebraKind::Extended, m).basis) cone.push_back(std::move(h));
  }
  if (cone.empty()) {
    throw WindowError("no generator degree m >= (" + std::to_string(k) + ",...) within radius " +
                      std::to_string(module.generator_radius()));
  }
  for (const auto& w : weights) {
    const Eigen::Index d = module.dim(w);
    if (d == 0) continue;
    std::vector<Matrix<Scalar>> blocks;
    bool tested = false;
    for (const auto& x : cone) {
      std::vector<ActResult> cols;
      bool ok = true;
      for (Eigen::Index b = 0; b < d && ok; ++b) {
        Vector<Scalar> e = Vector<Scalar>::Zero(d);
        e(b) = Scalar(1);
        cols.push_back(module.act(x, w, e));
        ok = cols.back().status != ActStatus::OutOfWindow;
      }
      if (!ok) continue;
      tested = true;
      Eigen::Index rows = 0;
      for (const auto& c : cols) {
        if (c.status == ActStatus::Ok) rows = c.value.size();
      }
      if (rows == 0) continue;
      Matrix<Scalar> block = Matrix<Scalar>::Zero(rows, d);
      for (Eigen::Index b = 0; b < d; ++b) {
        if (cols[static_cast<std::size_t>(b)].status == ActStatus::Ok) block.col(b) = cols[static_cast<std::size_t>(b)].value;
      }
      blocks.push_back(std::move(block));
    }
    if (!tested) {
      ++scan.untested_weights;
      continue;
    }
    ++scan.tested_weights;
    Eigen::Index total = 0;
    for (const auto& b : blocks) total += b.rows();
    Matrix<Scalar> stacked(total, d);
    Eigen::Index row = 0;
    for (const auto& b : blocks) {
      stacked.middleRows(row, b.rows()) = b;
      row += b.rows();
    }
    Matrix<Scalar> ker = total == 0 ? Matrix<Scalar>(Matrix<Scalar>::Identity(d, d)) : kernel(stacked);
    for (Eigen::Index c = 0; c < ker.cols(); ++c) scan.vectors.push_back({w, ker.col(c)});
  }
  if (scan.tested_weights == 0) {
    throw WindowError("window too small: no weight space admits a testable generator with m >= (" +
                      std::to_string(k) + ",...)");
  }
  return scan;
}

std::map<LatticeVector, Eigen::Index, LexLess> cyclic_span_window(const WeightModule& module,
                                                                  const LatticeVector& weight,
                                                                  const Vector<Scalar>& v) {
  std::map<LatticeVector, Eigen::Index, LexLess> out;
  if (Subspace<Scalar>::is_zero_vector(v)) return out;
  if (v.size() != module.dim(weight)) throw DomainError("vector does not match the weight space dimension");
  std::map<LatticeVector, Subspace<Scalar>, LexLess> spans;
  const auto gens = generators(module.rank(), module.generator_radius());
  std::deque<std::pair<LatticeVector, Vector<Scalar>>> queue;
  auto accept = [&](const LatticeVector& w, const Vector<Scalar>& x) {
    auto it = spans.find(w);
    if (it == spans.end()) it = spans.emplace(w, Subspace<Scalar>(x.size())).first;
    if (it->second.insert(x)) queue.emplace_back(w, x);
  };
  accept(weight, v);
  while (!queue.empty()) {
    auto [w, x] = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      ActResult r = module.act(g, w, x);
      if (r.status != ActStatus::Ok || Subspace<Scalar>::is_zero_vector(r.value)) continue;
      accept(r.weight, r.value);
    }
  }
  for (const auto& [w, s] : spans) {
    if (s.dim() > 0) out[w] = s.dim();
  }
  return out;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::CuspidalConsistent:
      return "CuspidalConsistent";
    case Classification::GHW:
      return "GHW";
    case Classification::Inconclusive:
      break;
  }
  return "Inconclusive";
}

ClassifyResult classify_truncated(const WeightModule& module, Eigen::Index bound) {
  ClassifyResult out;
  const auto weights = module.weights();
  if (weights.empty()) {
    out.notes.push_back("empty window");
    return out;
  }
  for (const auto& w : weights) out.max_multiplicity = std::max(out.max_multiplicity, module.dim(w));
  bool any_tested = false;
  for (int k = 1; k <= module.generator_radius(); ++k) {
    GhwScan scan;
    try {
      scan = detect_ghw_vectors(module, k);
    } catch (const WindowError&) {
      continue;
    }
    any_tested = true;
    if (!scan.vectors.empty()) {
      out.verdict = Classification::GHW;
      out.ghw_k = k;
      out.ghw_vectors = scan.vectors.size();
      return out;
    }
  }
  if (!any_tested) {
    out.notes.push_back("no GHW cone could be tested inside the window");
    return out;
  }
  if (out.max_multiplicity <= bound) {
    out.verdict = Classification::CuspidalConsistent;
  } else {
    out.notes.push_back("multiplicity " + std::to_string(out.max_multiplicity) + " exceeds the bound " +
                        std::to_string(bound));
  }
  return out;
}

}  // namespace divlie
