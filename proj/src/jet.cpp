#include "divlie/jet.hpp"

#include <sstream>

#include "divlie/parallel.hpp"

namespace divlie {

JetVector JetVector::basis(Eigen::Index index, const LatticeVector& degree) {
  JetVector v;
  v.add(JetKey{degree, index}, Scalar(1));
  return v;
}

void JetVector::add(const JetKey& key, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

JetVector& JetVector::operator+=(const JetVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

JetVector& JetVector::operator-=(const JetVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

JetVector& JetVector::operator*=(const Scalar& a) {
  if (a.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= a;
  return *this;
}

bool operator==(const JetVector& a, const JetVector& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (!(ia->first.degree == ib->first.degree) || ia->first.index != ib->first.index) return false;
    if (!(ia->second == ib->second)) return false;
  }
  return true;
}

std::string JetVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") v" << k.index << "*t^" << to_string(k.degree);
  }
  return os.str();
}

JetModule::JetModule(JetParams params, JetMode mode, const IrrepOptions& options)
    : params_(std::move(params)), mode_(mode), irrep_(build_irrep(params_.lambda, params_.c, options)) {
  if (params_.alpha.size() != params_.rank()) {
    throw RankMismatch("alpha has " + std::to_string(params_.alpha.size()) + " entries for rank " +
                       std::to_string(params_.rank()));
  }
}

void JetModule::act_into(const HomogeneousElement& x, const JetKey& key, const Scalar& coeff,
                         JetVector& out) const {
  const int n = rank();
  const LatticeVector target = x.degree + key.degree;
  if (!is_zero(x.u)) {
    Scalar scalar = inner(x.u, key.degree) + inner(x.u, params_.alpha);
    out.add(JetKey{target, key.index}, coeff * scalar);
    if (!is_zero(x.degree)) {
      Matrix<Scalar> m(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = Scalar(static_cast<long long>(x.degree(i))) * x.u(j);
      }
      for (const auto& [row, v] : irrep_.apply(m, key.index)) out.add(JetKey{target, row}, coeff * v);
    }
  }
  if (!x.c.is_zero()) out.add(JetKey{target, key.index}, coeff * x.c * params_.e);
}

JetVector JetModule::act(const HomogeneousElement& x, const JetVector& w) const {
  if (x.rank() != rank()) throw RankMismatch("element of rank " + std::to_string(x.rank()) +
                                             " acting on a rank " + std::to_string(rank()) + " module");
  if (mode_ == JetMode::Extended && !x.is_divergence_zero()) {
    throw DomainError("D(" + to_string(x.u) + ", " + to_string(x.degree) + ") is not divergence-zero");
  }
  JetVector out;
  for (const auto& [key, coeff] : w.terms()) {
    if (key.degree.size() != rank()) throw RankMismatch("jet vector rank does not match the module");
    act_into(x, key, coeff, out);
  }
  return out;
}

JetVector JetModule::act(const AlgebraElement& x, const JetVector& w) const {
  if (x.rank() != rank()) throw RankMismatch("element rank does not match the module");
  JetVector out;
  for (const auto& h : x.components()) out += act(h, w);
  return out;
}

JetVector JetModule::act_dij(int i, int j, const LatticeVector& r, const JetVector& w) const {
  const int n = rank();
  if (r.size() != n) throw RankMismatch("degree rank does not match the module");
  if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("D_ij index out of range");
  auto S = [](std::int64_t v) { return Scalar(static_cast<long long>(v)); };
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  if (i != j) {
    for (int k = 0; k < n; ++k) {
      if (k != i) m(k, i) += S(r(j)) * S(r(k));
      if (k != j) m(k, j) -= S(r(i)) * S(r(k));
    }
    m(i, i) += S(r(i)) * S(r(j));
    m(j, j) -= S(r(i)) * S(r(j));
  }
  JetVector out;
  if (i == j) return out;
  for (const auto& [key, coeff] : w.terms()) {
    const LatticeVector target = r + key.degree;
    Scalar scalar = S(r(j)) * (S(key.degree(i)) + params_.alpha(i)) - S(r(i)) * (S(key.degree(j)) + params_.alpha(j));
    out.add(JetKey{target, key.index}, coeff * scalar);
    for (const auto& [row, v] : irrep_.apply(m, key.index)) out.add(JetKey{target, row}, coeff * v);
  }
  return out;
}

std::vector<HomogeneousElement> acting_basis(JetMode mode, int n, std::int64_t radius) {
  std::vector<HomogeneousElement> out;
  for (const auto& m : box(n, radius)) {
    if (mode == JetMode::Extended) {
      for (auto& h : graded_component(AlgebraKind::Extended, m).basis) out.push_back(std::move(h));
    } else {
      for (auto& h : graded_component(AlgebraKind::Witt, m).basis) out.push_back(std::move(h));
      out.push_back(HomogeneousElement::t(m));
    }
  }
  return out;
}

namespace {

std::string describe(const HomogeneousElement& x) {
  std::string s = "D(" + to_string(x.u) + ", " + to_string(x.degree) + ")";
  if (!x.c.is_zero()) s += " + (" + x.c.str() + ") t^" + to_string(x.degree);
  return s;
}

std::vector<JetVector> window_vectors(const JetModule& module, std::int64_t radius) {
  std::vector<JetVector> out;
  for (const auto& s : box(module.rank(), radius)) {
    for (Eigen::Index b = 0; b < module.fiber_dim(); ++b) out.push_back(JetVector::basis(b, s));
  }
  return out;
}

}  // namespace

CheckReport check_module_axiom(const JetModule& module, std::int64_t radius) {
  const auto basis = acting_basis(module.mode(), module.rank(), radius);
  const auto vectors = window_vectors(module, radius);
  struct Partial {
    std::size_t cases = 0;
    std::vector<Violation> violations;
  };
  auto parts = parallel_map<Partial>(basis.size(), [&](std::size_t a) {
    Partial p;
    const auto& x = basis[a];
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const auto& y = basis[b];
      const HomogeneousElement z = bracket(x, y);
      for (const auto& w : vectors) {
        JetVector lhs = module.act(z, w);
        JetVector rhs = module.act(x, module.act(y, w)) - module.act(y, module.act(x, w));
        ++p.cases;
        if (!(lhs == rhs)) {
          p.violations.push_back({"x = " + describe(x) + ", y = " + describe(y) + ", w = " + w.str() +
                                  ": [x,y]w = " + lhs.str() + " but x(yw) - y(xw) = " + rhs.str()});
        }
      }
    }
    return p;
  });
  CheckReport report{"module_axiom", 0, {}, true};
  for (auto& p : parts) {
    report.cases += p.cases;
    for (auto& v : p.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

CheckReport check_associativity(const JetModule& module, std::int64_t radius) {
  const int n = module.rank();
  const auto degrees = box(n, radius);
  const auto vectors = window_vectors(module, radius);
  CheckReport report{"associativity", 0, {}, true};
  const Scalar& e = module.params().e;
  for (const auto& r : degrees) {
    const auto tr = HomogeneousElement::t(r);
    for (const auto& s : degrees) {
      const auto ts = HomogeneousElement::t(s);
      const auto trs = HomogeneousElement::t(r + s);
      for (const auto& w : vectors) {
        JetVector lhs = module.act(tr, module.act(ts, w));
        JetVector rhs = e * module.act(trs, w);
        ++report.cases;
        if (!(lhs == rhs)) {
          report.violations.push_back({"r = " + to_string(r) + ", s = " + to_string(s) + ", w = " + w.str() +
                                       ": t^r t^s w = " + lhs.str() + " but e t^{r+s} w = " + rhs.str()});
        }
      }
    }
  }
  return report;
}

CheckReport check_two_formulas(const JetModule& module, std::int64_t radius) {
  const int n = module.rank();
  const auto vectors = window_vectors(module, radius);
  CheckReport report{"two_formula_consistency", 0, {}, true};
  for (const auto& r : box(n, radius)) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto d = HomogeneousElement::Dij(i, j, r);
        for (const auto& w : vectors) {
          JetVector generic = module.act(d, w);
          JetVector special = module.act_dij(i, j, r, w);
          ++report.cases;
          if (!(generic == special)) {
            report.violations.push_back({"D_" + std::to_string(i + 1) + std::to_string(j + 1) + "(" +
                                         to_string(r) + ") on " + w.str() + ": generic " + generic.str() +
                                         " vs display " + special.str()});
          }
        }
      }
    }
  }
  return report;
}

std::string to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::Irreducible:
      return "Irreducible";
    case Irreducibility::Reducible:
      return "Reducible";
    case Irreducibility::Unknown:
      break;
  }
  return "Unknown";
}

bool is_integral(const CoefficientVector& alpha) {
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    if (!alpha(i).is_real() || !alpha(i).real().is_integer()) return false;
  }
  return true;
}

IrreducibilityVerdict is_irreducible(const JetParams& params, JetMode mode) {
  const int n = params.rank();
  if (params.alpha.size() != n) throw RankMismatch("alpha does not match the rank of lambda");
  IrreducibilityVerdict out;
  if (mode == JetMode::Extended) {
    if (!params.e.is_zero()) {
      out.verdict = Irreducibility::Irreducible;
      out.notes.push_back("e != 0");
    } else {
      out.verdict = Irreducibility::Unknown;
      out.notes.push_back("e = 0: no criterion is available for the divergence-zero extended algebra");
    }
    return out;
  }
  if (!params.e.is_zero()) out.notes.push_back("the A_n action (e) is ignored by this criterion");
  const bool lambda_zero = params.lambda.is_zero();
  const bool c_special = params.c == Scalar(0) || params.c == Scalar(n);
  const bool integral = is_integral(params.alpha);
  const bool first = !(lambda_zero && c_special && integral);
  bool second = true;
  for (int k = 1; k <= n - 1; ++k) {
    if (params.lambda == SlWeight::fundamental(n, k) && params.c == Scalar(k)) {
      second = false;
      out.notes.push_back("(lambda, c) = (omega_" + std::to_string(k) + ", " + std::to_string(k) + ")");
    }
  }
  if (!first) out.notes.push_back("(lambda, c, alpha) lies in {0} x {0, n} x Z^n");
  if (lambda_zero && params.c == Scalar(n) && !integral) {
    out.verdict = Irreducibility::Unknown;
    out.notes.push_back("k = n reading: (lambda, c) = (0, n) matches (omega_n, n) only if omega_n is read as 0; "
                        "not decided");
    return out;
  }
  out.verdict = first && second ? Irreducibility::Irreducible : Irreducibility::Reducible;
  return out;
}

WeightSupport weight_support(const JetModule& module, std::int64_t radius) {
  WeightSupport out;
  out.base = module.params().alpha;
  out.present = box(module.rank(), radius);
  for (const auto& s : out.present) out.multiplicity[s] = static_cast<std::int64_t>(module.fiber_dim());
  return out;
}

}  // namespace divlie
