#include "divlie/irrep.hpp"

#include <deque>
#include <map>
#include <unordered_map>

#include "divlie/linalg.hpp"

namespace divlie {

SlWeight SlWeight::fundamental(int n, int k) {
  check_rank(n);
  if (k < 1 || k > n - 1) {
    throw DomainError("fundamental weight omega_" + std::to_string(k) + " needs 1 <= k <= " +
                      std::to_string(n - 1));
  }
  SlWeight w = zero(n);
  w.marks[static_cast<std::size_t>(k - 1)] = 1;
  return w;
}

bool SlWeight::is_zero() const {
  for (int m : marks) {
    if (m != 0) return false;
  }
  return true;
}

int SlWeight::boxes() const {
  int total = 0;
  for (std::size_t k = 0; k < marks.size(); ++k) total += static_cast<int>(k + 1) * marks[k];
  return total;
}

std::vector<int> SlWeight::partition() const {
  const int n = rank();
  std::vector<int> p(static_cast<std::size_t>(n), 0);
  for (int i = n - 2; i >= 0; --i) {
    p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i + 1)] + marks[static_cast<std::size_t>(i)];
  }
  return p;
}

std::string SlWeight::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < marks.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(marks[k]);
  }
  return out + "]";
}

std::uint64_t weyl_dim(const SlWeight& lambda) {
  for (int m : lambda.marks) {
    if (m < 0) throw DomainError("weight " + lambda.str() + " is not dominant");
  }
  const int n = lambda.rank();
  const auto p = lambda.partition();
  mpz_class num = 1;
  mpz_class den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  }
  mpz_class q = num / den;
  if (!q.fits_ulong_p()) throw DomainError("Weyl dimension of " + lambda.str() + " exceeds 64 bits");
  return q.get_ui();
}

namespace {

// sl_n part of a gl_n module as integral weights plus off-diagonal E_ij.
struct Table {
  int n = 0;
  int boxes = 0;
  std::vector<LatticeVector> weights;
  std::vector<RationalOperator> off;  // n*n, diagonal slots empty

  Eigen::Index dim() const { return static_cast<Eigen::Index>(weights.size()); }
  const RationalOperator& E(int i, int j) const { return off[static_cast<std::size_t>(i * n + j)]; }
};

Table trivial_table(int n) {
  Table t;
  t.n = n;
  t.weights.push_back(lattice_zero(n));
  t.off.assign(static_cast<std::size_t>(n * n), RationalOperator(1, 1));
  return t;
}

Table exterior_power(int n, int k) {
  // k-subsets of {0..n-1} in lexicographic order
  std::vector<unsigned> subsets;
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
  while (true) {
    unsigned mask = 0;
    for (int c : comb) mask |= 1u << c;
    subsets.push_back(mask);
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::unordered_map<unsigned, Eigen::Index> index;
  for (std::size_t s = 0; s < subsets.size(); ++s) index[subsets[s]] = static_cast<Eigen::Index>(s);

  Table t;
  t.n = n;
  t.boxes = k;
  const auto dim = static_cast<Eigen::Index>(subsets.size());
  for (unsigned mask : subsets) {
    LatticeVector w = lattice_zero(n);
    for (int i = 0; i < n; ++i) w(i) = (mask >> i) & 1u;
    t.weights.push_back(w);
  }
  t.off.assign(static_cast<std::size_t>(n * n), RationalOperator(dim, dim));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Eigen::Triplet<Rational>> trips;
      for (Eigen::Index s = 0; s < dim; ++s) {
        unsigned mask = subsets[static_cast<std::size_t>(s)];
        if (!((mask >> j) & 1u) || ((mask >> i) & 1u)) continue;
        unsigned target = (mask & ~(1u << j)) | (1u << i);
        int lo = std::min(i, j);
        int hi = std::max(i, j);
        int between = 0;
        for (int q = lo + 1; q < hi; ++q) between += (mask >> q) & 1u;
        trips.emplace_back(index.at(target), s, Rational(between % 2 ? -1 : 1));
      }
      t.off[static_cast<std::size_t>(i * n + j)].setFromTriplets(trips.begin(), trips.end());
    }
  }
  return t;
}

// V (x) F restricted to the cyclic subspace of the product of highest vectors.
Table highest_component(const Table& v, const Table& f) {
  const int n = v.n;
  const Eigen::Index b = f.dim();
  const Eigen::Index total = v.dim() * b;

  // weight spaces of the tensor product
  std::map<LatticeVector, int, LexLess> weight_id;
  std::vector<LatticeVector> space_weight;
  std::vector<std::vector<Eigen::Index>> space_globals;
  std::vector<int> space_of(static_cast<std::size_t>(total));
  std::vector<Eigen::Index> local_of(static_cast<std::size_t>(total));
  for (Eigen::Index a = 0; a < v.dim(); ++a) {
    for (Eigen::Index s = 0; s < b; ++s) {
      LatticeVector w = v.weights[static_cast<std::size_t>(a)] + f.weights[static_cast<std::size_t>(s)];
      auto [it, inserted] = weight_id.try_emplace(w, static_cast<int>(space_weight.size()));
      if (inserted) {
        space_weight.push_back(w);
        space_globals.emplace_back();
      }
      const Eigen::Index g = a * b + s;
      space_of[static_cast<std::size_t>(g)] = it->second;
      local_of[static_cast<std::size_t>(g)] = static_cast<Eigen::Index>(space_globals[static_cast<std::size_t>(it->second)].size());
      space_globals[static_cast<std::size_t>(it->second)].push_back(g);
    }
  }

  // E_ij (x) 1 + 1 (x) E_ij applied to a vector of one weight space
  auto apply = [&](int i, int j, int space, const Vector<Rational>& x, int& target) -> Vector<Rational> {
    LatticeVector w = space_weight[static_cast<std::size_t>(space)] + lattice_unit(n, i) - lattice_unit(n, j);
    auto it = weight_id.find(w);
    if (it == weight_id.end()) {
      target = -1;
      return {};
    }
    target = it->second;
    Vector<Rational> y = Vector<Rational>::Zero(static_cast<Eigen::Index>(space_globals[static_cast<std::size_t>(target)].size()));
    const auto& globals = space_globals[static_cast<std::size_t>(space)];
    for (Eigen::Index l = 0; l < x.size(); ++l) {
      if (x(l).is_zero()) continue;
      const Eigen::Index g = globals[static_cast<std::size_t>(l)];
      const Eigen::Index a = g / b;
      const Eigen::Index s = g % b;
      for (RationalOperator::InnerIterator e(v.E(i, j), a); e; ++e) {
        y(local_of[static_cast<std::size_t>(e.row() * b + s)]) += x(l) * e.value();
      }
      for (RationalOperator::InnerIterator e(f.E(i, j), s); e; ++e) {
        y(local_of[static_cast<std::size_t>(a * b + e.row())]) += x(l) * e.value();
      }
    }
    return y;
  };

  std::vector<Subspace<Rational>> spans;
  for (const auto& g : space_globals) spans.emplace_back(static_cast<Eigen::Index>(g.size()));
  // basis vector k: (space, local vector); per space the global basis index of each generator
  std::vector<std::pair<int, Vector<Rational>>> basis;
  std::vector<std::vector<Eigen::Index>> generator_index(space_globals.size());

  auto accept = [&](int space, Vector<Rational> x) {
    if (!spans[static_cast<std::size_t>(space)].insert(x)) return false;
    generator_index[static_cast<std::size_t>(space)].push_back(static_cast<Eigen::Index>(basis.size()));
    basis.emplace_back(space, std::move(x));
    return true;
  };

  const int top = space_of[0];
  Vector<Rational> hv = Vector<Rational>::Zero(static_cast<Eigen::Index>(space_globals[static_cast<std::size_t>(top)].size()));
  hv(local_of[0]) = Rational(1);
  accept(top, hv);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (int j = 0; j + 1 < n; ++j) {
      int target = -1;
      Vector<Rational> y = apply(j + 1, j, basis[k].first, basis[k].second, target);
      if (target < 0 || Subspace<Rational>::is_zero_vector(y)) continue;
      if (accept(target, std::move(y))) queue.push_back(basis.size() - 1);
    }
  }

  Table out;
  out.n = n;
  out.boxes = v.boxes + f.boxes;
  const auto dim = static_cast<Eigen::Index>(basis.size());
  for (const auto& [space, x] : basis) out.weights.push_back(space_weight[static_cast<std::size_t>(space)]);
  out.off.assign(static_cast<std::size_t>(n * n), RationalOperator(dim, dim));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Eigen::Triplet<Rational>> trips;
      for (Eigen::Index k = 0; k < dim; ++k) {
        int target = -1;
        Vector<Rational> y = apply(i, j, basis[static_cast<std::size_t>(k)].first, basis[static_cast<std::size_t>(k)].second, target);
        if (target < 0 || Subspace<Rational>::is_zero_vector(y)) continue;
        auto coords = spans[static_cast<std::size_t>(target)].coordinates(y);
        if (!coords) throw Error("cyclic subspace is not stable under E_ij; construction bug");
        const auto& gens = generator_index[static_cast<std::size_t>(target)];
        for (Eigen::Index q = 0; q < coords->size(); ++q) {
          if (!(*coords)(q).is_zero()) trips.emplace_back(gens[static_cast<std::size_t>(q)], k, (*coords)(q));
        }
      }
      out.off[static_cast<std::size_t>(i * n + j)].setFromTriplets(trips.begin(), trips.end());
    }
  }
  return out;
}

Irrep from_table(const SlWeight& lambda, const Scalar& c, Table t) {
  return Irrep(lambda, c, std::move(t.weights), std::move(t.off));
}

}  // namespace

Irrep::Irrep(SlWeight lambda, Scalar c, std::vector<LatticeVector> gl_weights,
             std::vector<RationalOperator> off_diagonal)
    : n_(lambda.rank()),
      lambda_(std::move(lambda)),
      c_(std::move(c)),
      weights_(std::move(gl_weights)),
      rational_ops_(std::move(off_diagonal)) {
  check_rank(n_);
  shift_ = (c_ - Scalar(lambda_.boxes())) / Scalar(n_);
  const Eigen::Index d = dim();
  ops_.reserve(static_cast<std::size_t>(n_ * n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j) {
        ops_.push_back(E_rational(i, j).cast<Scalar>());
        continue;
      }
      rational_ops_[static_cast<std::size_t>(i * n_ + j)] = RationalOperator(d, d);
      std::vector<Eigen::Triplet<Scalar>> trips;
      for (Eigen::Index b = 0; b < d; ++b) {
        Scalar v = diagonal(i, b);
        if (!v.is_zero()) trips.emplace_back(b, b, v);
      }
      Operator op(d, d);
      op.setFromTriplets(trips.begin(), trips.end());
      ops_.push_back(std::move(op));
    }
  }
}

std::vector<std::int64_t> Irrep::h_weight(Eigen::Index b) const {
  const auto& w = weights_[static_cast<std::size_t>(b)];
  std::vector<std::int64_t> out;
  for (int i = 0; i + 1 < n_; ++i) out.push_back(w(i) - w(i + 1));
  return out;
}

Scalar Irrep::diagonal(int i, Eigen::Index b) const {
  return Scalar(static_cast<long long>(weights_[static_cast<std::size_t>(b)](i))) + shift_;
}

SparseColumn Irrep::apply(const Matrix<Scalar>& m, Eigen::Index b) const {
  std::map<Eigen::Index, Scalar> acc;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const Scalar& coeff = m(i, j);
      if (coeff.is_zero()) continue;
      if (i == j) {
        acc[b] += coeff * diagonal(i, b);
        continue;
      }
      for (RationalOperator::InnerIterator e(E_rational(i, j), b); e; ++e) {
        acc[e.row()] += coeff * Scalar(e.value());
      }
    }
  }
  SparseColumn out;
  for (auto& [row, v] : acc) {
    if (!v.is_zero()) out.emplace_back(row, std::move(v));
  }
  return out;
}

Irrep fundamental_irrep(int n, int k) {
  SlWeight lambda = SlWeight::fundamental(n, k);
  return from_table(lambda, Scalar(k), exterior_power(n, k));
}

Irrep build_irrep(const SlWeight& lambda, const Scalar& c, const IrrepOptions& options) {
  const int n = lambda.rank();
  check_rank(n);
  const std::uint64_t expected = weyl_dim(lambda);
  if (expected > options.max_dim) {
    throw DomainError("V" + lambda.str() + " has dimension " + std::to_string(expected) +
                      ", above the cap " + std::to_string(options.max_dim));
  }
  Table t = trivial_table(n);
  for (int k = 1; k <= n - 1; ++k) {
    if (lambda.marks[static_cast<std::size_t>(k - 1)] == 0) continue;
    Table f = exterior_power(n, k);
    for (int rep = 0; rep < lambda.marks[static_cast<std::size_t>(k - 1)]; ++rep) t = highest_component(t, f);
  }
  if (static_cast<std::uint64_t>(t.dim()) != expected) {
    throw Error("cyclic construction produced dimension " + std::to_string(t.dim()) +
                " but the Weyl formula gives " + std::to_string(expected));
  }
  return from_table(lambda, c, std::move(t));
}

Operator matrix_of_rank_one(const LatticeVector& r, const CoefficientVector& u, const Irrep& irrep) {
  const int n = irrep.rank();
  if (r.size() != n || u.size() != n) throw RankMismatch("rank-one matrix does not match the irrep rank");
  Operator out(irrep.dim(), irrep.dim());
  for (int i = 0; i < n; ++i) {
    if (r(i) == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (u(j).is_zero()) continue;
      Scalar coeff = Scalar(static_cast<long long>(r(i))) * u(j);
      out += coeff * irrep.E(i, j);
    }
  }
  return out;
}

namespace {

bool is_zero_operator(const Operator& op) {
  for (Eigen::Index k = 0; k < op.outerSize(); ++k) {
    for (Operator::InnerIterator it(op, k); it; ++it) {
      if (!it.value().is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> check_gl_relations(const Irrep& irrep) {
  std::vector<std::string> out;
  const int n = irrep.rank();
  const Eigen::Index d = irrep.dim();
  auto name = [](int i, int j) { return "E" + std::to_string(i + 1) + std::to_string(j + 1); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Operator lhs = irrep.E(i, j) * irrep.E(k, l);
          lhs -= Operator(irrep.E(k, l) * irrep.E(i, j));
          if (j == k) lhs -= irrep.E(i, l);
          if (l == i) lhs += irrep.E(k, j);
          if (!is_zero_operator(lhs)) {
            out.push_back("[" + name(i, j) + "," + name(k, l) + "] violates the gl_n relation");
          }
        }
      }
    }
  }
  Operator trace(d, d);
  for (int i = 0; i < n; ++i) trace += irrep.E(i, i);
  for (Eigen::Index b = 0; b < d; ++b) {
    Scalar diag = trace.coeff(b, b);
    if (!(diag == irrep.central_scalar())) {
      out.push_back("identity acts by " + diag.str() + " on basis vector " + std::to_string(b));
    }
  }
  const Eigen::Index hv = irrep.highest_vector();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (Operator::InnerIterator it(irrep.E(i, j), hv); it; ++it) {
        if (!it.value().is_zero()) out.push_back(name(i, j) + " does not annihilate the highest vector");
      }
    }
  }
  const auto h = irrep.h_weight(hv);
  for (int i = 0; i + 1 < n; ++i) {
    if (h[static_cast<std::size_t>(i)] != irrep.highest_weight().marks[static_cast<std::size_t>(i)]) {
      out.push_back("h_" + std::to_string(i + 1) + " eigenvalue on the highest vector differs from lambda");
    }
  }
  return out;
}

}  // namespace divlie
