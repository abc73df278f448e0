#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's bracket, irrep or Verma code.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "divlie/algebra.hpp"

namespace oracle {

using divlie::Scalar;
using Exponent = std::vector<std::int64_t>;
using Poly = std::map<Exponent, Scalar>;

inline void add_to(Poly& p, const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

// A vector field on the torus sum_m t^m sum_i u_i d_i, stored by the
// polynomial coefficient of each d_i, together with a function part.
struct Field {
  int n = 0;
  std::vector<Poly> coeff;  // coeff[i] multiplies d_i
  Poly func;
};

inline Exponent to_exp(const divlie::LatticeVector& m) {
  return Exponent(m.data(), m.data() + m.size());
}

inline Field from_element(const divlie::AlgebraElement& x) {
  Field f;
  f.n = x.rank();
  f.coeff.assign(static_cast<std::size_t>(f.n), {});
  for (const auto& [m, u] : x.d_terms()) {
    for (int i = 0; i < f.n; ++i) add_to(f.coeff[static_cast<std::size_t>(i)], to_exp(m), u(i));
  }
  for (const auto& [m, c] : x.t_terms()) add_to(f.func, to_exp(m), c);
  return f;
}

// Derivation applied to a Laurent polynomial: d_i t^s = s_i t^s.
inline Poly apply_field(const Field& x, const Poly& p) {
  Poly out;
  for (int i = 0; i < x.n; ++i) {
    for (const auto& [a, ca] : x.coeff[static_cast<std::size_t>(i)]) {
      for (const auto& [s, cs] : p) {
        if (s[static_cast<std::size_t>(i)] == 0) continue;
        Exponent e(s.size());
        for (std::size_t k = 0; k < s.size(); ++k) e[k] = a[k] + s[k];
        add_to(out, e, ca * cs * Scalar(static_cast<long long>(s[static_cast<std::size_t>(i)])));
      }
    }
  }
  return out;
}

// div(sum_i f_i d_i) = sum_i d_i f_i.
inline Poly divergence(const Field& x) {
  Poly out;
  for (int i = 0; i < x.n; ++i) {
    for (const auto& [e, c] : x.coeff[static_cast<std::size_t>(i)]) {
      add_to(out, e, c * Scalar(static_cast<long long>(e[static_cast<std::size_t>(i)])));
    }
  }
  return out;
}

// [(X, f), (Y, g)] = ([X, Y], X g - Y f), with [X, Y] read off from its
// values on the coordinate functions t_k.
inline divlie::AlgebraElement commutator(const divlie::AlgebraElement& x, const divlie::AlgebraElement& y) {
  const Field fx = from_element(x);
  const Field fy = from_element(y);
  const int n = fx.n;
  divlie::AlgebraElement out(n);
  for (int k = 0; k < n; ++k) {
    Poly tk;
    Exponent ek(static_cast<std::size_t>(n), 0);
    ek[static_cast<std::size_t>(k)] = 1;
    tk[ek] = Scalar(1);
    Poly xy = apply_field(fx, apply_field(fy, tk));
    for (const auto& [e, c] : apply_field(fy, apply_field(fx, tk))) add_to(xy, e, -c);
    for (const auto& [e, c] : xy) {
      divlie::LatticeVector m(n);
      for (int i = 0; i < n; ++i) m(i) = e[static_cast<std::size_t>(i)];
      m(k) -= 1;
      divlie::CoefficientVector u = divlie::coefficient_zero(n);
      u(k) = c;
      out.add_D(u, m);
    }
  }
  Poly f = apply_field(fx, fy.func);
  for (const auto& [e, c] : apply_field(fy, fx.func)) add_to(f, e, -c);
  for (const auto& [e, c] : f) {
    divlie::LatticeVector m(n);
    for (int i = 0; i < n; ++i) m(i) = e[static_cast<std::size_t>(i)];
    out.add_t(c, m);
  }
  return out;
}

// Number of semistandard Young tableaux of the given shape with entries
// 1..n, which equals dim V(lambda) for sl_n.
inline std::uint64_t count_ssyt(const std::vector<int>& shape, int n) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  }
  std::map<std::pair<int, int>, int> fill;
  std::function<std::uint64_t(std::size_t)> rec = [&](std::size_t k) -> std::uint64_t {
    if (k == cells.size()) return 1;
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, fill[{r - 1, c}] + 1);
    std::uint64_t total = 0;
    for (int v = lo; v <= n; ++v) {
      fill[{r, c}] = v;
      total += rec(k + 1);
    }
    return total;
  };
  return rec(0);
}

}  // namespace oracle

namespace oracle {

// Jet action for lambda = omega_1 on the defining representation C^n with
// E_ij e_b = delta_jb e_i + delta_ij (c - 1)/n e_b. Keys are (b, s).
using JetTerms = std::map<std::pair<std::int64_t, Exponent>, Scalar>;

inline JetTerms standard_jet_action(const divlie::HomogeneousElement& x, const divlie::CoefficientVector& alpha,
                                    const Scalar& c, const Scalar& e, std::int64_t b, const Exponent& s) {
  const auto n = static_cast<std::int64_t>(s.size());
  JetTerms out;
  Exponent target(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) target[k] = s[k] + x.degree(static_cast<Eigen::Index>(k));
  auto add = [&](std::int64_t row, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = out.try_emplace({row, target}, v);
    if (inserted) return;
    it->second += v;
    if (it->second.is_zero()) out.erase(it);
  };
  Scalar scalar(0);
  Scalar trace(0);
  for (std::int64_t i = 0; i < n; ++i) {
    const Scalar ui = x.u(static_cast<Eigen::Index>(i));
    const Scalar ri(static_cast<long long>(x.degree(static_cast<Eigen::Index>(i))));
    scalar += ui * (Scalar(static_cast<long long>(s[static_cast<std::size_t>(i)])) + alpha(static_cast<Eigen::Index>(i)));
    trace += ri * ui;
  }
  scalar += trace * (c - Scalar(1)) / Scalar(static_cast<long long>(n));
  add(b, scalar + e * x.c);
  // (r u^T) e_b = u_b r
  const Scalar ub = x.u(static_cast<Eigen::Index>(b));
  for (std::int64_t i = 0; i < n; ++i) add(i, ub * Scalar(static_cast<long long>(x.degree(static_cast<Eigen::Index>(i)))));
  return out;
}

}  // namespace oracle

namespace oracle {

inline std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Dimension of the weight space `target` of U(G^-) (x) X by direct multiset
// counting: negative-part degrees sum_i a_i m_i - r beta with 1 <= r <= depth
// and |a_i| <= window each carry n basis elements; X contributes its weight
// multiplicities.
inline std::uint64_t pbw_multiplicity(const std::vector<std::vector<std::int64_t>>& m_basis,
                                      const std::vector<std::int64_t>& beta, std::int64_t window, int depth,
                                      const std::vector<std::int64_t>& target,
                                      const std::map<std::vector<std::int64_t>, std::uint64_t>& x_weights) {
  const std::size_t n = beta.size();
  struct Degree {
    std::vector<std::int64_t> d;
    int level;
  };
  std::vector<Degree> degrees;
  std::vector<std::int64_t> a(n - 1, -window);
  while (true) {
    for (int r = 1; r <= depth; ++r) {
      std::vector<std::int64_t> d(n);
      for (std::size_t k = 0; k < n; ++k) {
        d[k] = -r * beta[k];
        for (std::size_t j = 0; j + 1 < n; ++j) d[k] += a[j] * m_basis[j][k];
      }
      degrees.push_back({d, r});
    }
    std::size_t j = 0;
    while (j < a.size() && a[j] == window) a[j++] = -window;
    if (j == a.size()) break;
    ++a[j];
  }
  std::uint64_t total = 0;
  for (const auto& [xw, mult] : x_weights) {
    std::vector<std::int64_t> rest(n);
    for (std::size_t k = 0; k < n; ++k) rest[k] = target[k] - xw[k];
    // count multisets over `degrees` summing to rest within the depth budget
    std::function<std::uint64_t(std::size_t, std::vector<std::int64_t>&, int)> count =
        [&](std::size_t i, std::vector<std::int64_t>& remaining, int budget) -> std::uint64_t {
      if (i == degrees.size()) {
        for (auto v : remaining) {
          if (v != 0) return 0;
        }
        return 1;
      }
      std::uint64_t sum = count(i + 1, remaining, budget);
      const auto& deg = degrees[i];
      std::vector<std::int64_t> r = remaining;
      for (int k = 1; k * deg.level <= budget; ++k) {
        for (std::size_t c = 0; c < n; ++c) r[c] -= deg.d[c];
        sum += binomial(n + static_cast<std::uint64_t>(k) - 1, static_cast<std::uint64_t>(k)) *
               count(i + 1, r, budget - k * deg.level);
      }
      return sum;
    };
    total += mult * count(0, rest, depth);
  }
  return total;
}

}  // namespace oracle
