#include "divlie/algebra.hpp"

#include "divlie/linalg.hpp"

namespace divlie {
namespace {

void require_same_rank(int a, int b) {
  if (a != b) {
    throw RankMismatch("operands have ranks " + std::to_string(a) + " and " + std::to_string(b));
  }
}

void require_index(int n, int i) {
  if (i < 0 || i >= n) {
    throw DomainError("index " + std::to_string(i + 1) + " outside 1.." + std::to_string(n));
  }
}

void axpy(CoefficientVector& y, const Scalar& a, const CoefficientVector& x) {
  if (a.is_zero()) return;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!x(i).is_zero()) y(i) += a * x(i);
  }
}

}  // namespace

HomogeneousElement::HomogeneousElement(LatticeVector m, CoefficientVector u_part, Scalar t_part)
    : degree(std::move(m)), u(std::move(u_part)), c(std::move(t_part)) {
  check_rank(static_cast<int>(degree.size()));
  require_same_rank(static_cast<int>(degree.size()), static_cast<int>(u.size()));
}

HomogeneousElement HomogeneousElement::zero(const LatticeVector& m) {
  return HomogeneousElement(m, coefficient_zero(static_cast<int>(m.size())));
}

HomogeneousElement HomogeneousElement::d(int n, int i) {
  check_rank(n);
  require_index(n, i);
  CoefficientVector u = coefficient_zero(n);
  u(i) = Scalar(1);
  return HomogeneousElement(lattice_zero(n), std::move(u));
}

HomogeneousElement HomogeneousElement::t(const LatticeVector& m, Scalar coeff) {
  return HomogeneousElement(m, coefficient_zero(static_cast<int>(m.size())), std::move(coeff));
}

HomogeneousElement HomogeneousElement::D(const CoefficientVector& u, const LatticeVector& m) {
  return HomogeneousElement(m, u);
}

HomogeneousElement HomogeneousElement::Dij(int i, int j, const LatticeVector& r) {
  const int n = static_cast<int>(r.size());
  check_rank(n);
  require_index(n, i);
  require_index(n, j);
  CoefficientVector u = coefficient_zero(n);
  u(i) += Scalar(static_cast<long long>(r(j)));
  u(j) -= Scalar(static_cast<long long>(r(i)));
  return HomogeneousElement(r, std::move(u));
}

HomogeneousElement& HomogeneousElement::operator+=(const HomogeneousElement& o) {
  if (!(degree == o.degree)) throw DomainError("adding homogeneous elements of different degrees");
  axpy(u, Scalar(1), o.u);
  c += o.c;
  return *this;
}

HomogeneousElement& HomogeneousElement::operator-=(const HomogeneousElement& o) {
  if (!(degree == o.degree)) throw DomainError("subtracting homogeneous elements of different degrees");
  axpy(u, Scalar(-1), o.u);
  c -= o.c;
  return *this;
}

HomogeneousElement& HomogeneousElement::operator*=(const Scalar& a) {
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (!u(i).is_zero()) u(i) *= a;
  }
  c *= a;
  return *this;
}

bool operator==(const HomogeneousElement& a, const HomogeneousElement& b) {
  if (a.is_zero() && b.is_zero()) return a.rank() == b.rank();
  return a.degree.size() == b.degree.size() && a.degree == b.degree && equal(a.u, b.u) && a.c == b.c;
}

HomogeneousElement bracket(const HomogeneousElement& x, const HomogeneousElement& y) {
  require_same_rank(x.rank(), y.rank());
  const Scalar pk = inner(x.u, y.degree);
  const Scalar qm = inner(y.u, x.degree);
  HomogeneousElement out = HomogeneousElement::zero(x.degree + y.degree);
  axpy(out.u, pk, y.u);
  axpy(out.u, -qm, x.u);
  if (!pk.is_zero() && !y.c.is_zero()) out.c += pk * y.c;
  if (!qm.is_zero() && !x.c.is_zero()) out.c -= qm * x.c;
  return out;
}

AlgebraElement::AlgebraElement(int n) : n_(n) { check_rank(n); }

AlgebraElement::AlgebraElement(const HomogeneousElement& h) : n_(h.rank()) { add(h); }

void AlgebraElement::require_rank(int n) const { require_same_rank(n_, n); }

bool AlgebraElement::is_divergence_zero() const {
  for (const auto& [m, u] : d_) {
    if (!inner(u, m).is_zero()) return false;
  }
  return true;
}

std::vector<LatticeVector> AlgebraElement::support() const {
  std::map<LatticeVector, bool, LexLess> seen;
  for (const auto& kv : d_) seen[kv.first] = true;
  for (const auto& kv : t_) seen[kv.first] = true;
  std::vector<LatticeVector> out;
  out.reserve(seen.size());
  for (const auto& kv : seen) out.push_back(kv.first);
  return out;
}

HomogeneousElement AlgebraElement::component(const LatticeVector& m) const {
  require_rank(static_cast<int>(m.size()));
  HomogeneousElement h = HomogeneousElement::zero(m);
  if (auto it = d_.find(m); it != d_.end()) h.u = it->second;
  if (auto it = t_.find(m); it != t_.end()) h.c = it->second;
  return h;
}

std::vector<HomogeneousElement> AlgebraElement::components() const {
  std::vector<HomogeneousElement> out;
  for (const auto& m : support()) out.push_back(component(m));
  return out;
}

void AlgebraElement::add_D(const CoefficientVector& u, const LatticeVector& m) {
  require_rank(static_cast<int>(m.size()));
  require_rank(static_cast<int>(u.size()));
  if (divlie::is_zero(u)) return;
  auto [it, inserted] = d_.try_emplace(m, u);
  if (inserted) return;
  axpy(it->second, Scalar(1), u);
  if (divlie::is_zero(it->second)) d_.erase(it);
}

void AlgebraElement::add_t(const Scalar& c, const LatticeVector& m) {
  require_rank(static_cast<int>(m.size()));
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

void AlgebraElement::add(const HomogeneousElement& h) {
  add_D(h.u, h.degree);
  add_t(h.c, h.degree);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_rank(o.n_);
  for (const auto& [m, u] : o.d_) add_D(u, m);
  for (const auto& [m, c] : o.t_) add_t(c, m);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_rank(o.n_);
  for (const auto& [m, u] : o.d_) {
    CoefficientVector neg = u;
    for (Eigen::Index i = 0; i < neg.size(); ++i) neg(i) = -neg(i);
    add_D(neg, m);
  }
  for (const auto& [m, c] : o.t_) add_t(-c, m);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& a) {
  if (a.is_zero()) {
    d_.clear();
    t_.clear();
    return *this;
  }
  for (auto& [m, u] : d_) {
    for (Eigen::Index i = 0; i < u.size(); ++i) u(i) *= a;
  }
  for (auto& [m, c] : t_) c *= a;
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n_ != b.n_ || a.d_.size() != b.d_.size() || a.t_.size() != b.t_.size()) return false;
  for (auto ia = a.d_.begin(), ib = b.d_.begin(); ia != a.d_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || !equal(ia->second, ib->second)) return false;
  }
  for (auto ia = a.t_.begin(), ib = b.t_.begin(); ia != a.t_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
  }
  return true;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_rank(x.rank(), y.rank());
  AlgebraElement out(x.rank());
  const auto xs = x.components();
  const auto ys = y.components();
  for (const auto& a : xs) {
    for (const auto& b : ys) out.add(bracket(a, b));
  }
  return out;
}

std::pair<Scalar, LatticeVector> divergence(const CoefficientVector& u, const LatticeVector& r) {
  require_same_rank(static_cast<int>(u.size()), static_cast<int>(r.size()));
  return {inner(u, r), r};
}

AlgebraElement dij(int n, int i, int j, const LatticeVector& r) {
  require_same_rank(n, static_cast<int>(r.size()));
  return HomogeneousElement::Dij(i, j, r);
}

GradedComponent graded_component(AlgebraKind kind, const LatticeVector& m) {
  const int n = static_cast<int>(m.size());
  check_rank(n);
  GradedComponent out{m, {}};
  if (kind == AlgebraKind::Witt) {
    for (int j = 0; j < n; ++j) {
      CoefficientVector u = coefficient_zero(n);
      u(j) = Scalar(1);
      out.basis.push_back(HomogeneousElement::D(u, m));
    }
    return out;
  }
  if (is_zero(m)) {
    for (int j = 0; j < n; ++j) out.basis.push_back(HomogeneousElement::d(n, j));
  } else {
    Subspace<Scalar> span(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        HomogeneousElement h = HomogeneousElement::Dij(i, j, m);
        Vector<Scalar> v(n);
        for (int k = 0; k < n; ++k) v(k) = h.u(k);
        if (span.insert(v)) out.basis.push_back(std::move(h));
      }
    }
  }
  if (kind == AlgebraKind::Extended) out.basis.push_back(HomogeneousElement::t(m));
  return out;
}

CoefficientVector divergence_free_coordinates(const CoefficientVector& u, const LatticeVector& m) {
  const int n = static_cast<int>(m.size());
  require_same_rank(n, static_cast<int>(u.size()));
  int p = 0;
  while (p < n && m(p) == 0) ++p;
  if (p == n) throw DomainError("divergence_free_coordinates needs a nonzero degree");
  if (!inner(u, m).is_zero()) throw DomainError("D-part is not divergence-zero at " + to_string(m));
  // Basis from graded_component: D_{ip} (i < p) has u = m_p e_i,
  // D_{pj} (j > p) has u = m_j e_p - m_p e_j.
  const Scalar mp(static_cast<long long>(m(p)));
  CoefficientVector out(n - 1);
  int k = 0;
  for (int i = 0; i < p; ++i) out(k++) = u(i) / mp;
  for (int j = p + 1; j < n; ++j) out(k++) = -u(j) / mp;
  return out;
}

CoordinateChange::CoordinateChange(IntMatrix a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols()) throw DomainError("coordinate change needs a square matrix");
  check_rank(static_cast<int>(a_.rows()));
  b_ = unimodular_inverse(a_).transpose();
}

HomogeneousElement CoordinateChange::operator()(const HomogeneousElement& x) const {
  require_same_rank(static_cast<int>(a_.rows()), x.rank());
  const Eigen::Index n = a_.rows();
  LatticeVector degree = a_ * x.degree;
  CoefficientVector u = coefficient_zero(static_cast<int>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (b_(i, j) != 0 && !x.u(j).is_zero()) u(i) += Scalar(static_cast<long long>(b_(i, j))) * x.u(j);
    }
  }
  return HomogeneousElement(std::move(degree), std::move(u), x.c);
}

AlgebraElement CoordinateChange::operator()(const AlgebraElement& x) const {
  require_same_rank(static_cast<int>(a_.rows()), x.rank());
  AlgebraElement out(x.rank());
  for (const auto& h : x.components()) out.add((*this)(h));
  return out;
}

AlgebraElement change_coordinates(const IntMatrix& a, const AlgebraElement& x) {
  return CoordinateChange(a)(x);
}

CoefficientVector find_orthogonal(const LatticeVector& r, const LatticeVector& s) {
  const int n = static_cast<int>(r.size());
  require_same_rank(n, static_cast<int>(s.size()));
  check_rank(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (s(j) * r(i) - s(i) * r(j) == 0) continue;
      CoefficientVector u = coefficient_zero(n);
      u(j) = Scalar(static_cast<long long>(r(i) + s(i)));
      u(i) = Scalar(static_cast<long long>(-(r(j) + s(j))));
      return u;
    }
  }
  throw DomainError("r = " + to_string(r) + " and s = " + to_string(s) +
                    " are collinear; no orthogonal vector exists");
}

}  // namespace divlie
