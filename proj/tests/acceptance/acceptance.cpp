// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// line fails. Usage: divlie_acceptance [corpus-dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "divlie/io.hpp"
#include "divlie/linalg.hpp"
#include "divlie/parallel.hpp"
#include "divlie/rank2.hpp"
#include "oracles.hpp"

using namespace divlie;

namespace {

struct Line {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed condition with a short witness.
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << " first failure: " << what << ";";
      pass = false;
    }
  }
};

std::vector<HomogeneousElement> window_basis(int n, std::int64_t radius) {
  std::vector<HomogeneousElement> out;
  for (const auto& m : box(n, radius)) {
    for (auto& h : graded_component(AlgebraKind::Extended, m).basis) out.push_back(std::move(h));
  }
  return out;
}

// 1. Jacobi identity and antisymmetry on basis triples in [-2,2]^n.
//    With antisymmetry verified on every pair the Jacobi sum is alternating,
//    so nondecreasing index triples cover every ordered triple.
void algebra_axioms(Line& line) {
  for (int n : {2, 3}) {
    const auto basis = window_basis(n, 2);
    const std::size_t b = basis.size();
    std::vector<HomogeneousElement> pairs(b * b);
    std::size_t antisym = 0;
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        pairs[i * b + j] = bracket(basis[i], basis[j]);
        if (j < i) {
          ++antisym;
          line.require((pairs[i * b + j] + pairs[j * b + i]).is_zero(), "antisymmetry n=" + std::to_string(n));
        }
        if (j == i) line.require(pairs[i * b + i].is_zero(), "[x,x] = 0");
      }
    }
    const auto counts = parallel_map<std::size_t>(b, [&](std::size_t i) {
      std::size_t bad = 0;
      for (std::size_t j = i; j < b; ++j) {
        for (std::size_t k = j; k < b; ++k) {
          const HomogeneousElement jac = bracket(basis[i], pairs[j * b + k]) + bracket(basis[j], pairs[k * b + i]) +
                                         bracket(basis[k], pairs[i * b + j]);
          if (!jac.is_zero()) ++bad;
        }
      }
      return bad;
    });
    std::size_t bad = 0;
    for (auto c : counts) bad += c;
    line.require(bad == 0, std::to_string(bad) + " Jacobi violations for n=" + std::to_string(n));
    line.detail << " n=" << n << ": " << b << " basis elements, " << b * (b + 1) * (b + 2) / 6 << " triples, "
                << antisym << " pairs;";
  }
}

// 2. Cyclic relation, divergence formula, D-part rank, graded dimensions and
//    [G_m, G_-m] = 0 on [-2,2]^n.
void structural_identities(Line& line) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> small(-5, 5);
  std::size_t cases = 0;
  for (int n : {2, 3, 4}) {
    const std::int64_t radius = n == 4 ? 1 : 2;
    for (const auto& r : box(n, radius)) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            HomogeneousElement s = Scalar(r(k)) * HomogeneousElement::Dij(i, j, r) +
                                   Scalar(r(i)) * HomogeneousElement::Dij(j, k, r) +
                                   Scalar(r(j)) * HomogeneousElement::Dij(k, i, r);
            ++cases;
            line.require(s.is_zero(), "cyclic relation at " + to_string(r));
          }
        }
      }
      CoefficientVector u(n);
      for (int i = 0; i < n; ++i) u(i) = Scalar(Rational(small(rng), 3), Rational(small(rng)));
      const auto [coeff, deg] = divergence(u, r);
      const oracle::Poly expected = oracle::divergence(oracle::from_element(AlgebraElement::D(u, r)));
      oracle::Poly got;
      oracle::add_to(got, oracle::to_exp(deg), coeff);
      line.require(got == expected, "divergence at " + to_string(r));

      const auto comp = graded_component(AlgebraKind::Extended, r);
      const bool zero = is_zero(r);
      line.require(comp.dimension() == (zero ? n + 1 : n), "graded dimension at " + to_string(r));
      if (!zero) {
        Matrix<Scalar> dij(n * (n - 1) / 2, n);
        Eigen::Index row = 0;
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) dij.row(row++) = HomogeneousElement::Dij(i, j, r).u.transpose();
        }
        line.require(divlie::rank(dij) == n - 1, "D-part rank at " + to_string(r));
        for (const auto& x : comp.basis) {
          for (const auto& y : graded_component(AlgebraKind::Extended, LatticeVector(-r)).basis) {
            line.require(bracket(x, y).is_zero(), "[G_m, G_-m] at " + to_string(r));
          }
        }
      }
    }
  }
  line.detail << " n=2,3 on [-2,2]^n and n=4 on [-1,1]^4, " << cases << " cyclic cases;";
}

IntMatrix random_unimodular(int n, std::mt19937& rng) {
  IntMatrix a = IntMatrix::Identity(n, n);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 8; ++step) {
    const int i = idx(rng);
    const int j = idx(rng);
    if (i != j) a.row(i) += coef(rng) * a.row(j);
  }
  if (rng() % 2) a.row(0).swap(a.row(n - 1));
  return a;
}

// 3. change_coordinates preserves brackets.
void automorphism(Line& line) {
  std::mt19937 rng(3);
  std::size_t pairs = 0;
  for (int n : {2, 3}) {
    const auto basis = window_basis(n, n == 2 ? 2 : 1);
    for (int sample = 0; sample < 20; ++sample) {
      const IntMatrix a = random_unimodular(n, rng);
      const CoordinateChange ta(a);
      std::vector<AlgebraElement> images;
      for (const auto& h : basis) images.push_back(ta(AlgebraElement(h)));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
          ++pairs;
          line.require(bracket(images[i], images[j]) == ta(AlgebraElement(bracket(basis[i], basis[j]))),
                       "bracket not preserved, n=" + std::to_string(n));
        }
      }
    }
  }
  line.detail << " 20 matrices per n, windows [-2,2]^2 and [-1,1]^3, " << pairs << " pairs;";
}

void dominant_weights(int n, std::uint64_t max_dim, std::vector<int>& marks, std::vector<SlWeight>& out) {
  if (static_cast<int>(marks.size()) == n - 1) {
    out.push_back(SlWeight{marks});
    return;
  }
  for (int a = 0;; ++a) {
    std::vector<int> probe = marks;
    probe.push_back(a);
    probe.resize(static_cast<std::size_t>(n - 1), 0);
    if (weyl_dim(SlWeight{probe}) > max_dim) break;
    marks.push_back(a);
    dominant_weights(n, max_dim, marks, out);
    marks.pop_back();
  }
}

// 4. Irreps with Weyl dimension <= 200.
void irreps(Line& line) {
  for (int n : {2, 3, 4}) {
    std::vector<SlWeight> weights;
    std::vector<int> marks;
    dominant_weights(n, 200, marks, weights);
    const auto results = parallel_map<std::pair<bool, bool>>(weights.size(), [&](std::size_t i) {
      const SlWeight& w = weights[i];
      const Irrep v = build_irrep(w, Scalar(Rational(w.boxes() + 1, 3)));
      const bool dim_ok = static_cast<std::uint64_t>(v.dim()) == weyl_dim(w) &&
                          static_cast<std::uint64_t>(v.dim()) == oracle::count_ssyt(w.partition(), w.rank());
      return std::make_pair(dim_ok, check_gl_relations(v).empty());
    });
    for (std::size_t i = 0; i < weights.size(); ++i) {
      line.require(results[i].first, "dimension of V(" + weights[i].str() + ")");
      line.require(results[i].second, "gl relations on V(" + weights[i].str() + ")");
    }
    line.detail << " n=" << n << ": " << weights.size() << " weights;";
  }
}

// 5. Jet modules on [-1,1]^n.
void jet_modules(Line& line) {
  std::size_t modules = 0;
  for (int n : {2, 3}) {
    CoefficientVector alpha(n);
    for (int i = 0; i < n; ++i) alpha(i) = Scalar(Rational(1 - 2 * i, 3 + 2 * i));
    for (const SlWeight& lambda : {SlWeight::zero(n), SlWeight::fundamental(n, 1)}) {
      for (const Scalar& e : {Scalar(0), Scalar(1), parse_scalar("1+i")}) {
        ++modules;
        const std::string tag = "n=" + std::to_string(n) + " lambda=" + lambda.str() + " e=" + e.str();
        JetModule m(JetParams{lambda, Scalar(Rational(lambda.boxes() + 1, 2)), alpha, e});
        line.require(check_module_axiom(m, 1).passed(), "module axiom " + tag);
        line.require(check_associativity(m, 1).passed(), "associativity " + tag);
        for (const auto& [s, d] : weight_support(m, 1).multiplicity) {
          line.require(d == static_cast<std::int64_t>(weyl_dim(lambda)), "multiplicity " + tag);
        }
        if (!e.is_zero()) {
          JetWindowModule w(m, 1);
          for (int k = 1; k <= 2; ++k) {
            const GhwScan scan = detect_ghw_vectors(w, k);
            line.require(scan.vectors.empty() && scan.tested_weights > 0, "GHW vectors " + tag);
          }
        }
      }
    }
  }
  line.detail << " " << modules << " modules; GHW scan for k=1,2;";
}

InducingModule character_x() {
  CoefficientVector l0(2);
  l0 << Scalar(Rational(1, 3)), Scalar(2);
  return InducingModule::character(l0, Scalar(Rational(-1, 2)));
}

TriangularData standard_triangular() { return make_triangular({LatticeVector{{1, 0}}}, LatticeVector{{0, 1}}); }

std::vector<std::int64_t> vec(const LatticeVector& v) { return {v.data(), v.data() + v.size()}; }

// 6. Character X, n = 2, M = Z e_1, beta = e_2, W = 2, depth 2.
void character_verma(Line& line) {
  const TruncatedModule m = build_verma(character_x(), standard_triangular(), 2, 2);
  std::map<std::vector<std::int64_t>, std::uint64_t> xw;
  for (const auto& [w, d] : m.x_weights()) xw[vec(w)] = static_cast<std::uint64_t>(d);
  const auto oracle_dim = [&](const LatticeVector& w) {
    return oracle::pbw_multiplicity({{1, 0}}, {0, 1}, m.window(), m.depth(), vec(w), xw);
  };
  std::size_t level1 = 0;
  for (const auto& [w, d] : m.weight_table()) {
    line.require(static_cast<std::uint64_t>(d) == oracle_dim(w), "PBW oracle at " + to_string(w));
    if (m.level(w) == -1) {
      line.require(d == 2, "level-1 multiplicity at " + to_string(w));
      level1 += static_cast<std::size_t>(d);
    }
  }
  const LatticeVector deep{{0, -2}};
  line.require(m.dim(deep) == 13 && oracle_dim(deep) == 13, "multiplicity 13 at (0,-2)");
  const SingularReport s = find_singular_vectors(m, 1);
  line.require(s.total_dim() == level1, "level-1 singular dimension");
  const TruncatedModule q = irreducible_quotient(m);
  const TruncatedModule x = build_verma(character_x(), standard_triangular(), 0, 2);
  line.require(q.weight_table() == x.weight_table(), "quotient differs from X");
  line.detail << " level-1 total " << level1 << ", singular " << s.total_dim() << ", dim(0,-2) = " << m.dim(deep)
              << ", quotient weights " << q.weight_table().size() << ";";
}

// 7. Restriction of V(omega_1, alpha, 1), n = 2, W = 1, depth 2, X on [-2,2].
void jet_restriction_verma(Line& line) {
  CoefficientVector alpha(2);
  alpha << Scalar(Rational(1, 2)), Scalar(Rational(1, 3));
  const JetParams p{SlWeight::fundamental(2, 1), Scalar(1), alpha, Scalar(1)};
  const TruncatedModule m =
      build_verma(InducingModule::jet_restriction(p, lattice_zero(2), 2), standard_triangular(), 2, 1);
  const SingularReport s = find_singular_vectors(m, 1);
  line.require(s.total_dim() == 0, "level-1 singular vectors exist (dimension " + std::to_string(s.total_dim()) + ")");
  const TruncatedModule q = irreducible_quotient(m);
  const auto violations = check_support_law(q);
  line.require(violations.empty(), "support law");
  const ClassifyResult c = classify_truncated(q, 100);
  line.require(c.verdict == Classification::GHW, "classify gave " + to_string(c.verdict));
  line.detail << " singular dim " << s.total_dim() << (s.window_unreliable ? " (window-unreliable)" : "")
              << "; support law " << (violations.empty() ? "holds" : "violated") << "; classify "
              << to_string(c.verdict) << "; quotient window-unreliable " << (q.window_unreliable() ? "yes" : "no")
              << ";";
}

// 8. Regression corpus: jet dumps must be CuspidalConsistent with bound
//    dim V(lambda), quotient dumps GHW.
void dichotomy(Line& line, const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::size_t jets = 0, quotients = 0, inconclusive_clean = 0, unreliable = 0;
  for (const auto& f : files) {
    const io::Json doc = io::read_file(f.string());
    const std::string kind = io::document_kind(doc);
    const std::string name = f.filename().string();
    if (kind == "jet_dump") {
      ++jets;
      const io::JetDump d = io::jet_dump_from_json(doc);
      JetModule m(d.source.params, d.source.mode);
      io::WeightTable table;
      for (const auto& [s, k] : weight_support(m, d.window).multiplicity) table[s] = k;
      line.require(table == d.weights, name + " weight table");
      const auto r = classify_truncated(JetWindowModule(m, d.window),
                                        static_cast<Eigen::Index>(weyl_dim(d.source.params.lambda)));
      if (r.verdict == Classification::Inconclusive) ++inconclusive_clean;
      line.require(r.verdict == Classification::CuspidalConsistent, name + " gave " + to_string(r.verdict));
    } else if (kind == "verma_dump") {
      ++quotients;
      const io::VermaDump d = io::verma_dump_from_json(doc);
      line.require(d.quotient, name + " is not a quotient dump");
      const TruncatedModule q = irreducible_quotient(io::build(d.source));
      line.require(q.weight_table() == d.weights, name + " weight table");
      const auto r = classify_truncated(q, 100);
      const bool clean = !q.window_unreliable();
      if (!clean) ++unreliable;
      if (clean && r.verdict == Classification::Inconclusive) ++inconclusive_clean;
      line.require(r.verdict == Classification::GHW, name + " gave " + to_string(r.verdict));
    }
  }
  line.require(jets > 0 && quotients > 0, "corpus incomplete");
  line.require(inconclusive_clean == 0, "Inconclusive on a ledger-clean run");
  line.detail << " " << jets << " jet dumps, " << quotients << " quotient dumps (" << unreliable
              << " ledger-flagged), " << inconclusive_clean << " Inconclusive on clean runs;";
}

// 9. alpha = sqrt 2 on [-10,10]^2.
void half_planes(Line& line) {
  const auto alpha = QuadraticIrrational::sqrt(2);
  const std::int64_t radius = 10;
  const HalfPlanes h = alpha_halfplane(alpha, radius);
  std::set<std::pair<std::int64_t, std::int64_t>> pos, neg;
  for (const auto& v : h.positive) pos.insert({v(0), v(1)});
  for (const auto& v : h.negative) neg.insert({v(0), v(1)});
  line.require(pos.size() + neg.size() + 1 == 21 * 21, "partition size");
  for (const auto& v : box(2, radius)) {
    if (is_zero(v)) continue;
    const bool p = pos.count({v(0), v(1)}) == 1;
    line.require(p != (neg.count({v(0), v(1)}) == 1), "not a partition at " + to_string(v));
    line.require(p == (neg.count({-v(0), -v(1)}) == 1), "antisymmetry at " + to_string(v));
    // independent sign of p*sqrt2 + q
    const long double f = static_cast<long double>(v(0)) * std::sqrt(2.0L) + static_cast<long double>(v(1));
    line.require(p == (f > 0), "sign at " + to_string(v));
  }
  std::size_t sums = 0;
  for (const auto* half : {&pos, &neg}) {
    for (const auto& [a, b] : *half) {
      for (const auto& [c, d] : *half) {
        if (std::abs(a + c) > radius || std::abs(b + d) > radius) continue;
        ++sums;
        line.require(half->count({a + c, b + d}) == 1, "closure");
      }
    }
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const LatticeVector& x = h.positive[rng() % h.positive.size()];
    const auto between = alpha_between(alpha, x, 4 * radius);
    line.require(between.has_value(), "density for " + to_string(x));
    if (between) {
      line.require(alpha_greater(alpha, *between, lattice_zero(2)) && alpha_greater(alpha, x, *between),
                   "density witness for " + to_string(x));
    }
  }
  line.detail << " " << h.positive.size() << " positive, " << h.negative.size() << " negative, " << sums
              << " checkable sums, 50 density pairs;";
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path corpus = argc > 1 ? argv[1] : DIVLIE_CORPUS_DIR;
  const std::vector<std::pair<std::string, std::function<void(Line&)>>> criteria{
      {"algebra axioms (Jacobi, antisymmetry)", algebra_axioms},
      {"structural identities", structural_identities},
      {"coordinate automorphisms", automorphism},
      {"irrep validation", irreps},
      {"jet modules", jet_modules},
      {"character Verma anchors", character_verma},
      {"jet-restriction Verma", jet_restriction_verma},
      {"dichotomy corpus", [&](Line& l) { dichotomy(l, corpus); }},
      {"alpha half-planes", half_planes},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line line;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(line);
    } catch (const std::exception& e) {
      line.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!line.pass) ++failed;
    std::cout << (line.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ":" << line.detail.str()
              << " " << std::fixed << std::setprecision(1) << s << "s" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
