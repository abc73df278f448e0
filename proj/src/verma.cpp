#include "divlie/verma.hpp"

#include <deque>
#include <unordered_map>

namespace divlie {

InducingModule InducingModule::character(CoefficientVector lambda0, Scalar c0) {
  InducingModule x;
  x.kind = Kind::Character;
  check_rank(static_cast<int>(lambda0.size()));
  x.lambda0 = std::move(lambda0);
  x.c0 = std::move(c0);
  return x;
}

InducingModule InducingModule::jet_restriction(JetParams params, LatticeVector s0, std::int64_t x_window) {
  if (s0.size() != params.rank()) throw RankMismatch("s0 does not match the jet rank");
  if (x_window < 0) throw DomainError("X window must be non-negative");
  InducingModule x;
  x.kind = Kind::JetRestriction;
  x.lambda0 = params.alpha;
  for (Eigen::Index i = 0; i < s0.size(); ++i) x.lambda0(i) += Scalar(static_cast<long long>(s0(i)));
  x.jet = std::move(params);
  x.s0 = std::move(s0);
  x.x_window = x_window;
  return x;
}

int InducingModule::rank() const { return static_cast<int>(lambda0.size()); }

std::size_t LeakageLedger::total() const {
  std::size_t t = 0;
  for (const auto& [k, v] : entries) t += v;
  return t;
}

std::size_t SingularReport::total_dim() const {
  std::size_t t = 0;
  for (const auto& s : spaces) t += static_cast<std::size_t>(s.basis.cols());
  return t;
}

namespace {

using Terms = std::map<int, Scalar>;

struct Res {
  Terms v;
  bool leaked = false;
};

void add_scaled(Res& into, const Res& from, const Scalar& c) {
  into.leaked = into.leaked || from.leaked;
  if (c.is_zero()) return;
  for (const auto& [id, x] : from.v) {
    auto [it, inserted] = into.v.try_emplace(id, c * x);
    if (inserted) continue;
    it->second += c * x;
    if (it->second.is_zero()) into.v.erase(it);
  }
}

struct MonoKey {
  std::vector<int> gens;
  int x;
  bool operator==(const MonoKey& o) const { return x == o.x && gens == o.gens; }
};

struct MonoHash {
  std::size_t operator()(const MonoKey& k) const noexcept {
    std::size_t h = std::hash<int>{}(k.x);
    for (int g : k.gens) h ^= std::hash<int>{}(g) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct NonnegKey {
  LatticeVector degree;
  int j;
  int mono;
  bool operator==(const NonnegKey& o) const { return j == o.j && mono == o.mono && degree == o.degree; }
};

struct NonnegHash {
  std::size_t operator()(const NonnegKey& k) const noexcept {
    std::size_t h = LatticeHash{}(k.degree);
    h ^= std::hash<int>{}(k.j) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<int>{}(k.mono) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

/// Shared straightening state: generator table, monomial basis, memo tables
/// and the leakage ledger. Not thread-safe; the memo is filled lazily.
class VermaEngine {
 public:
  VermaEngine(InducingModule x, TriangularData tri, int depth, std::int64_t window);

  struct Generator {
    int depth;
    LatticeVector a;
    int type;
    LatticeVector degree;
    HomogeneousElement elem;
  };
  struct XBasis {
    LatticeVector coords;  // M-coordinates
    Eigen::Index b;        // irrep index
    LatticeVector offset;
  };
  struct Mono {
    std::vector<int> gens;
    int x;
    int depth;
    LatticeVector weight;
  };

  InducingModule x_;
  TriangularData tri_;
  int depth_;
  std::int64_t window_;
  int n_;
  std::optional<JetModule> jet_;

  std::vector<Generator> gens_;
  std::vector<XBasis> xbasis_;
  std::map<LatticeVector, int, LexLess> xindex_;  // (coords, b) flattened: coords then b
  std::vector<Mono> monos_;
  std::vector<int> tail_;
  std::unordered_map<MonoKey, int, MonoHash> mono_index_;
  std::map<LatticeVector, std::vector<int>, LexLess> weight_basis_;
  std::vector<int> position_;

  std::unordered_map<std::uint64_t, Res> gen_memo_;
  std::unordered_map<NonnegKey, Res, NonnegHash> nonneg_memo_;
  std::map<LatticeVector, GradedComponent, LexLess> components_;
  LeakageLedger ledger_;

  std::int64_t side() const { return 2 * window_ + 1; }
  int per_depth() const {
    std::int64_t cells = 1;
    for (int i = 0; i < n_ - 1; ++i) cells *= side();
    return static_cast<int>(cells) * n_;
  }
  int gen_id(int depth, const LatticeVector& a, int type) const {
    std::int64_t lex = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) lex = lex * side() + (a(i) + window_);
    return (depth - 1) * per_depth() + static_cast<int>(lex) * n_ + type;
  }
  int x_id(const LatticeVector& coords, Eigen::Index b) const {
    LatticeVector key(coords.size() + 1);
    key.head(coords.size()) = coords;
    key(coords.size()) = b;
    auto it = xindex_.find(key);
    return it == xindex_.end() ? -1 : it->second;
  }
  int lookup(std::vector<int> gens, int x) const {
    auto it = mono_index_.find(MonoKey{std::move(gens), x});
    if (it == mono_index_.end()) throw Error("monomial outside the truncated basis; straightening bug");
    return it->second;
  }

  const GradedComponent& component(const LatticeVector& d) {
    auto it = components_.find(d);
    if (it == components_.end()) it = components_.emplace(d, graded_component(AlgebraKind::Extended, d)).first;
    return it->second;
  }

  std::vector<std::pair<int, Scalar>> decompose(const HomogeneousElement& h) const {
    std::vector<std::pair<int, Scalar>> out;
    if (is_zero(h.degree)) {
      for (int i = 0; i < n_; ++i) {
        if (!h.u(i).is_zero()) out.emplace_back(i, h.u(i));
      }
      if (!h.c.is_zero()) out.emplace_back(n_, h.c);
      return out;
    }
    if (!is_zero(h.u)) {
      auto coords = divergence_free_coordinates(h.u, h.degree);
      for (Eigen::Index j = 0; j < coords.size(); ++j) {
        if (!coords(j).is_zero()) out.emplace_back(static_cast<int>(j), coords(j));
      }
    }
    if (!h.c.is_zero()) out.emplace_back(n_ - 1, h.c);
    return out;
  }

  void leak(const std::string& what) { ++ledger_.entries[what]; }

  Res x_action(const LatticeVector& d, int j, int x);
  const Res& act_gen(int g, int mono);
  const Res& act_nonneg(const LatticeVector& d, int j, int mono);
  Res act_elem(const HomogeneousElement& h, int mono);

  /// h applied to a combination of monomials; overflow is set when the image
  /// would need depth beyond D.
  Res apply(const HomogeneousElement& h, const Terms& v, bool& overflow);
};

VermaEngine::VermaEngine(InducingModule x, TriangularData tri, int depth, std::int64_t window)
    : x_(std::move(x)), tri_(std::move(tri)), depth_(depth), window_(window), n_(tri_.rank()) {
  if (x_.rank() != n_) throw RankMismatch("inducing module and decomposition have different ranks");
  if (depth < 0) throw DomainError("depth must be non-negative");
  if (window < 1) throw DomainError("generator window must be at least 1");

  // X basis
  if (x_.kind == InducingModule::Kind::Character) {
    xbasis_.push_back({lattice_zero(n_ - 1), 0, lattice_zero(n_)});
  } else {
    jet_.emplace(*x_.jet, JetMode::Extended);
    for (const auto& c : box(n_ - 1, x_.x_window)) {
      for (Eigen::Index b = 0; b < jet_->fiber_dim(); ++b) xbasis_.push_back({c, b, tri_.compose(c, 0)});
    }
  }
  for (std::size_t i = 0; i < xbasis_.size(); ++i) {
    LatticeVector key(n_);
    key.head(n_ - 1) = xbasis_[i].coords;
    key(n_ - 1) = xbasis_[i].b;
    xindex_[key] = static_cast<int>(i);
  }

  // generators in id order
  for (int r = 1; r <= depth_; ++r) {
    for (const auto& a : box(n_ - 1, window_)) {
      LatticeVector d = tri_.compose(a, -r);
      const auto& comp = component(d);
      for (int j = 0; j < n_; ++j) gens_.push_back({r, a, j, d, comp.basis[static_cast<std::size_t>(j)]});
    }
  }

  // monomials: nondecreasing generator words of total depth <= D
  std::vector<std::vector<int>> words;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start, int budget) -> void {
    words.push_back(cur);
    for (int g = start; g < static_cast<int>(gens_.size()); ++g) {
      if (gens_[static_cast<std::size_t>(g)].depth > budget) break;
      cur.push_back(g);
      self(self, g, budget - gens_[static_cast<std::size_t>(g)].depth);
      cur.pop_back();
    }
  };
  rec(rec, 0, depth_);
  std::stable_sort(words.begin(), words.end(), [&](const auto& a, const auto& b) {
    int da = 0;
    int db = 0;
    for (int g : a) da += gens_[static_cast<std::size_t>(g)].depth;
    for (int g : b) db += gens_[static_cast<std::size_t>(g)].depth;
    return da < db;
  });
  for (const auto& w : words) {
    int dep = 0;
    LatticeVector wt = lattice_zero(n_);
    for (int g : w) {
      dep += gens_[static_cast<std::size_t>(g)].depth;
      wt += gens_[static_cast<std::size_t>(g)].degree;
    }
    for (std::size_t xi = 0; xi < xbasis_.size(); ++xi) {
      const int id = static_cast<int>(monos_.size());
      monos_.push_back({w, static_cast<int>(xi), dep, wt + xbasis_[xi].offset});
      mono_index_.emplace(MonoKey{w, static_cast<int>(xi)}, id);
    }
  }
  tail_.assign(monos_.size(), -1);
  position_.assign(monos_.size(), 0);
  for (std::size_t id = 0; id < monos_.size(); ++id) {
    const auto& m = monos_[id];
    if (!m.gens.empty()) tail_[id] = lookup(std::vector<int>(m.gens.begin() + 1, m.gens.end()), m.x);
    auto& list = weight_basis_[m.weight];
    position_[id] = static_cast<int>(list.size());
    list.push_back(static_cast<int>(id));
  }
}

Res VermaEngine::x_action(const LatticeVector& d, int j, int x) {
  Res out;
  const auto& xb = xbasis_[static_cast<std::size_t>(x)];
  if (x_.kind == InducingModule::Kind::Character) {
    if (!is_zero(d)) return out;
    Scalar v = j < n_ ? x_.lambda0(j) : x_.c0;
    if (!v.is_zero()) out.v[x] = v;
    return out;
  }
  const HomogeneousElement& e = component(d).basis[static_cast<std::size_t>(j)];
  LatticeVector s = x_.s0 + xb.offset;
  JetVector image = jet_->act(e, JetVector::basis(xb.b, s));
  for (const auto& [key, c] : image.terms()) {
    LatticeVector coords = tri_.m_coords(LatticeVector(key.degree - x_.s0));
    int id = sup_norm(coords) <= x_.x_window ? x_id(coords, key.index) : -1;
    if (id < 0) {
      out.leaked = true;
      leak("X window: X-vector at M-coordinates " + to_string(coords));
      continue;
    }
    auto [it, inserted] = out.v.try_emplace(id, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.v.erase(it);
    }
  }
  return out;
}

const Res& VermaEngine::act_gen(int g, int mono) {
  const std::uint64_t key = (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint32_t>(mono);
  if (auto it = gen_memo_.find(key); it != gen_memo_.end()) return it->second;
  Res out;
  const Mono& mo = monos_[static_cast<std::size_t>(mono)];
  if (mo.gens.empty() || g <= mo.gens.front()) {
    std::vector<int> w;
    w.reserve(mo.gens.size() + 1);
    w.push_back(g);
    w.insert(w.end(), mo.gens.begin(), mo.gens.end());
    out.v[lookup(std::move(w), mo.x)] = Scalar(1);
  } else {
    // g y1 rest = y1 (g rest) + [g, y1] rest
    const int y1 = mo.gens.front();
    const int rest = tail_[static_cast<std::size_t>(mono)];
    Res first = act_gen(g, rest);
    for (const auto& [id, c] : first.v) {
      const Mono& m = monos_[static_cast<std::size_t>(id)];
      if (m.gens.empty() || y1 <= m.gens.front()) {
        std::vector<int> w;
        w.push_back(y1);
        w.insert(w.end(), m.gens.begin(), m.gens.end());
        add_scaled(out, Res{{{lookup(std::move(w), m.x), Scalar(1)}}, false}, c);
      } else {
        add_scaled(out, act_gen(y1, id), c);
      }
    }
    out.leaked = out.leaked || first.leaked;
    HomogeneousElement h = bracket(gens_[static_cast<std::size_t>(g)].elem, gens_[static_cast<std::size_t>(y1)].elem);
    add_scaled(out, act_elem(h, rest), Scalar(1));
  }
  return gen_memo_.emplace(key, std::move(out)).first->second;
}

const Res& VermaEngine::act_nonneg(const LatticeVector& d, int j, int mono) {
  NonnegKey key{d, j, mono};
  if (auto it = nonneg_memo_.find(key); it != nonneg_memo_.end()) return it->second;
  Res out;
  const Mono& mo = monos_[static_cast<std::size_t>(mono)];
  const std::int64_t lvl = tri_.level(d);
  if (lvl > mo.depth) {
    // image would sit above X
  } else if (mo.gens.empty()) {
    if (lvl == 0) out = x_action(d, j, mo.x);
  } else {
    // h y1 rest = y1 (h rest) + [h, y1] rest
    const int y1 = mo.gens.front();
    const int rest = tail_[static_cast<std::size_t>(mono)];
    Res first = act_nonneg(d, j, rest);
    for (const auto& [id, c] : first.v) add_scaled(out, act_gen(y1, id), c);
    out.leaked = out.leaked || first.leaked;
    HomogeneousElement e = component(d).basis[static_cast<std::size_t>(j)];
    HomogeneousElement h = bracket(e, gens_[static_cast<std::size_t>(y1)].elem);
    add_scaled(out, act_elem(h, rest), Scalar(1));
  }
  return nonneg_memo_.emplace(std::move(key), std::move(out)).first->second;
}

Res VermaEngine::act_elem(const HomogeneousElement& h, int mono) {
  Res out;
  if (h.is_zero()) return out;
  const std::int64_t lvl = tri_.level(h.degree);
  if (lvl < 0) {
    const LatticeVector a = tri_.m_coords(h.degree);
    if (-lvl > depth_ || -lvl + monos_[static_cast<std::size_t>(mono)].depth > depth_) {
      throw Error("straightening left the depth range; caller must check levels");
    }
    if (sup_norm(a) > window_) {
      out.leaked = true;
      leak("generator window: factor of degree " + to_string(h.degree));
      return out;
    }
    for (const auto& [j, c] : decompose(h)) add_scaled(out, act_gen(gen_id(static_cast<int>(-lvl), a, j), mono), c);
    return out;
  }
  for (const auto& [j, c] : decompose(h)) add_scaled(out, act_nonneg(h.degree, j, mono), c);
  return out;
}

Res VermaEngine::apply(const HomogeneousElement& h, const Terms& v, bool& overflow) {
  Res out;
  overflow = false;
  const std::int64_t lvl = tri_.level(h.degree);
  for (const auto& [id, c] : v) {
    const int dep = monos_[static_cast<std::size_t>(id)].depth;
    if (lvl - dep > 0) continue;
    if (lvl - dep < -depth_) {
      overflow = true;
      continue;
    }
    add_scaled(out, act_elem(h, id), c);
  }
  return out;
}

namespace {

// Terms of a weight-space vector.
Terms to_terms(const std::vector<int>& basis, const Vector<Scalar>& v) {
  Terms t;
  for (Eigen::Index p = 0; p < v.size(); ++p) {
    if (!v(p).is_zero()) t[basis[static_cast<std::size_t>(p)]] = v(p);
  }
  return t;
}

}  // namespace

int TruncatedModule::rank() const { return engine_->n_; }
CoefficientVector TruncatedModule::base_weight() const { return engine_->x_.lambda0; }
const TriangularData& TruncatedModule::triangular() const { return engine_->tri_; }
const InducingModule& TruncatedModule::inducing() const { return engine_->x_; }
int TruncatedModule::depth() const { return engine_->depth_; }
std::int64_t TruncatedModule::window() const { return engine_->window_; }
const LeakageLedger& TruncatedModule::ledger() const { return engine_->ledger_; }

std::int64_t TruncatedModule::level(const LatticeVector& weight) const { return engine_->tri_.level(weight); }

Eigen::Index TruncatedModule::dim(const LatticeVector& weight) const {
  auto it = engine_->weight_basis_.find(weight);
  if (it == engine_->weight_basis_.end()) return 0;
  Eigen::Index d = static_cast<Eigen::Index>(it->second.size());
  if (submodule_) {
    auto s = submodule_->spaces.find(weight);
    if (s != submodule_->spaces.end()) d -= s->second.dim();
  }
  return d;
}

std::vector<LatticeVector> TruncatedModule::weights() const {
  std::vector<LatticeVector> out;
  for (const auto& [w, list] : engine_->weight_basis_) {
    if (dim(w) > 0) out.push_back(w);
  }
  return out;
}

std::map<LatticeVector, Eigen::Index, LexLess> TruncatedModule::weight_table() const {
  std::map<LatticeVector, Eigen::Index, LexLess> out;
  for (const auto& w : weights()) out[w] = dim(w);
  return out;
}

std::map<LatticeVector, Eigen::Index, LexLess> TruncatedModule::x_weights() const {
  std::map<LatticeVector, Eigen::Index, LexLess> out;
  for (const auto& xb : engine_->xbasis_) out[xb.offset]++;
  return out;
}

std::int64_t TruncatedModule::generator_radius() const {
  std::int64_t r = 0;
  for (const auto& g : engine_->gens_) r = std::max(r, sup_norm(g.degree));
  for (const auto& xb : engine_->xbasis_) r = std::max(r, sup_norm(xb.offset));
  return std::max<std::int64_t>(r, 1);
}

std::vector<std::string> TruncatedModule::basis_labels(const LatticeVector& weight) const {
  std::vector<std::string> out;
  auto it = engine_->weight_basis_.find(weight);
  if (it == engine_->weight_basis_.end()) return out;
  std::vector<Eigen::Index> cols;
  if (submodule_) {
    cols = submodule_->spaces.at(weight).free_columns();
  } else {
    for (std::size_t p = 0; p < it->second.size(); ++p) cols.push_back(static_cast<Eigen::Index>(p));
  }
  for (auto p : cols) {
    const auto& m = engine_->monos_[static_cast<std::size_t>(it->second[static_cast<std::size_t>(p)])];
    std::string s;
    for (int g : m.gens) {
      const auto& gen = engine_->gens_[static_cast<std::size_t>(g)];
      s += (gen.type == rank() - 1 ? "t" : "D" + std::to_string(gen.type + 1)) + to_string(gen.degree) + " ";
    }
    const auto& xb = engine_->xbasis_[static_cast<std::size_t>(m.x)];
    s += "x" + std::to_string(xb.b) + to_string(xb.coords);
    out.push_back(s);
  }
  return out;
}

ActResult TruncatedModule::act_full(const HomogeneousElement& x, const LatticeVector& weight,
                                    const Vector<Scalar>& v, bool& leaked) const {
  leaked = false;
  ActResult out;
  out.weight = weight + x.degree;
  auto& eng = *engine_;
  const std::int64_t target_level = eng.tri_.level(out.weight);
  if (target_level > 0) {
    out.status = ActStatus::KnownZero;
    return out;
  }
  if (target_level < -eng.depth_) {
    out.status = ActStatus::OutOfWindow;
    return out;
  }
  if (eng.tri_.level(x.degree) < 0 && sup_norm(eng.tri_.m_coords(x.degree)) > eng.window_) {
    out.status = ActStatus::OutOfWindow;
    return out;
  }
  auto src = eng.weight_basis_.find(weight);
  if (src == eng.weight_basis_.end()) throw DomainError("weight " + to_string(weight) + " is not in the module");
  bool overflow = false;
  Res r = eng.apply(x, to_terms(src->second, v), overflow);
  leaked = r.leaked;
  auto dst = eng.weight_basis_.find(out.weight);
  if (dst == eng.weight_basis_.end()) {
    if (!r.v.empty()) throw Error("image outside the weight table; straightening bug");
    out.status = r.leaked ? ActStatus::OutOfWindow : ActStatus::KnownZero;
    return out;
  }
  out.value = Vector<Scalar>::Zero(static_cast<Eigen::Index>(dst->second.size()));
  for (const auto& [id, c] : r.v) out.value(eng.position_[static_cast<std::size_t>(id)]) = c;
  out.status = r.leaked ? ActStatus::OutOfWindow : ActStatus::Ok;
  return out;
}

ActResult TruncatedModule::act(const HomogeneousElement& x, const LatticeVector& weight,
                               const Vector<Scalar>& v) const {
  if (x.rank() != rank()) throw RankMismatch("element rank does not match the module");
  if (!submodule_) {
    bool leaked = false;
    return act_full(x, weight, v, leaked);
  }
  const auto& src_space = submodule_->spaces.at(weight);
  const auto free = src_space.free_columns();
  if (static_cast<std::size_t>(v.size()) != free.size()) throw DomainError("vector does not match the quotient weight space");
  Vector<Scalar> lifted = Vector<Scalar>::Zero(src_space.ambient());
  for (std::size_t k = 0; k < free.size(); ++k) lifted(free[k]) = v(static_cast<Eigen::Index>(k));
  bool leaked = false;
  ActResult full = act_full(x, weight, lifted, leaked);
  if (full.status != ActStatus::Ok) return full;
  auto it = submodule_->spaces.find(full.weight);
  const Vector<Scalar> reduced = it->second.reduce(full.value);
  const auto target_free = it->second.free_columns();
  if (target_free.empty()) {
    full.status = ActStatus::KnownZero;
    full.value = Vector<Scalar>();
    return full;
  }
  full.value = Vector<Scalar>(static_cast<Eigen::Index>(target_free.size()));
  for (std::size_t k = 0; k < target_free.size(); ++k) full.value(static_cast<Eigen::Index>(k)) = reduced(target_free[k]);
  return full;
}

TruncatedModule build_verma(const InducingModule& x, const TriangularData& tri, int depth, std::int64_t window) {
  TruncatedModule m;
  m.engine_ = std::make_shared<VermaEngine>(x, tri, depth, window);
  return m;
}

namespace {

using SubspaceMap = std::map<LatticeVector, Subspace<Scalar>, LexLess>;

// Raising kernels at level -l; images are reduced modulo `modulo` when given.
SingularReport raising_kernels(const TruncatedModule& module, int l, const SubspaceMap* modulo) {
  SingularReport report;
  report.level = l;
  const auto& tri = module.triangular();
  const auto& x = module.inducing();
  const int n = module.rank();
  const std::int64_t xw = x.kind == InducingModule::Kind::Character ? 0 : x.x_window;
  for (const auto& [w, d] : module.weight_table()) {
    if (module.level(w) != -l) continue;
    const LatticeVector wm = tri.m_coords(w);
    std::vector<Matrix<Scalar>> blocks;
    bool unreliable = false;
    for (int j = 1; j <= l; ++j) {
      const std::int64_t reach = j == l ? xw : (l - j) * module.window() + xw;
      for (const auto& off : box(n - 1, reach)) {
        LatticeVector z = tri.compose(LatticeVector(off - wm), j);
        for (const auto& g : graded_component(AlgebraKind::Extended, z).basis) {
          Matrix<Scalar> block;
          for (Eigen::Index b = 0; b < d; ++b) {
            Vector<Scalar> e = Vector<Scalar>::Zero(d);
            e(b) = Scalar(1);
            bool leaked = false;
            ActResult r = module.act_full(g, w, e, leaked);
            unreliable = unreliable || leaked;
            if (r.value.size() == 0) continue;
            Vector<Scalar> col = r.value;
            if (modulo) col = modulo->at(r.weight).reduce(col);
            if (block.size() == 0) block = Matrix<Scalar>::Zero(col.size(), d);
            block.col(b) = col;
          }
          if (block.size() > 0) blocks.push_back(std::move(block));
        }
      }
    }
    Eigen::Index rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    Matrix<Scalar> stacked(rows, d);
    Eigen::Index row = 0;
    for (const auto& b : blocks) {
      stacked.middleRows(row, b.rows()) = b;
      row += b.rows();
    }
    Matrix<Scalar> ker = rows == 0 ? Matrix<Scalar>(Matrix<Scalar>::Identity(d, d)) : kernel(stacked);
    report.window_unreliable = report.window_unreliable || unreliable;
    if (ker.cols() > 0) report.spaces.push_back({w, std::move(ker), unreliable});
  }
  return report;
}

}  // namespace

SingularReport find_singular_vectors(const TruncatedModule& module, int level) {
  if (module.is_quotient()) throw DomainError("singular vectors are searched in the Verma module, not a quotient");
  if (level < 1 || level > module.depth()) {
    throw DomainError("level " + std::to_string(level) + " outside 1.." + std::to_string(module.depth()));
  }
  return raising_kernels(module, level, nullptr);
}

TruncatedModule irreducible_quotient(const TruncatedModule& module) {
  if (module.is_quotient()) throw DomainError("module is already a quotient");
  auto sub = std::make_shared<TruncatedModule::Submodule>();
  for (const auto& [w, d] : module.weight_table()) sub->spaces.emplace(w, Subspace<Scalar>(d));

  const auto& tri = module.triangular();
  const int n = module.rank();
  std::vector<HomogeneousElement> closure;
  for (int r = -module.depth(); r <= module.depth(); ++r) {
    for (const auto& a : box(n - 1, module.window())) {
      for (auto& g : graded_component(AlgebraKind::Extended, tri.compose(a, r)).basis) closure.push_back(std::move(g));
    }
  }

  TruncatedModule out = module;
  std::size_t skipped = 0;
  for (int l = 1; l <= module.depth(); ++l) {
    SingularReport rep = raising_kernels(module, l, &sub->spaces);
    out.unreliable_ = out.unreliable_ || rep.window_unreliable;
    std::deque<std::pair<LatticeVector, Vector<Scalar>>> queue;
    for (const auto& s : rep.spaces) {
      auto& space = sub->spaces.at(s.weight);
      for (Eigen::Index c = 0; c < s.basis.cols(); ++c) {
        Vector<Scalar> v = s.basis.col(c);
        if (space.insert(v)) queue.emplace_back(s.weight, std::move(v));
      }
    }
    while (!queue.empty()) {
      auto [w, v] = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : closure) {
        bool leaked = false;
        ActResult r = module.act_full(g, w, v, leaked);
        if (leaked) {
          ++skipped;
          continue;
        }
        if (r.status != ActStatus::Ok || Subspace<Scalar>::is_zero_vector(r.value)) continue;
        auto& target = sub->spaces.at(r.weight);
        if (target.insert(r.value)) queue.emplace_back(r.weight, r.value);
      }
    }
  }
  if (skipped > 0) {
    out.unreliable_ = true;
    out.notes_.push_back(std::to_string(skipped) + " leaked closure images were not added to the submodule");
  }
  out.submodule_ = std::move(sub);
  return out;
}

std::vector<std::string> check_support_law(const TruncatedModule& quotient) {
  std::vector<std::string> out;
  const auto xw = quotient.x_weights();
  const auto& tri = quotient.triangular();
  for (const auto& [w, d] : quotient.weight_table()) {
    const std::int64_t lvl = quotient.level(w);
    if (lvl > 0) {
      out.push_back("weight offset " + to_string(w) + " has positive level");
    } else if (lvl == 0 && !xw.count(w)) {
      out.push_back("level-0 weight offset " + to_string(w) + " is not a weight of X");
    } else if (lvl < 0 && !(tri.m_part(w) + lvl * tri.beta() == w)) {
      out.push_back("weight offset " + to_string(w) + " is not in -N beta + M");
    }
  }
  for (const auto& [w, d] : xw) {
    if (quotient.dim(w) != d) {
      out.push_back("submodule meets X at weight offset " + to_string(w) + " (quotient dim " +
                    std::to_string(quotient.dim(w)) + ", X dim " + std::to_string(d) + ")");
    }
  }
  return out;
}

PbwCheck check_pbw_consistency(const TruncatedModule& module, std::int64_t radius) {
  if (module.is_quotient()) throw DomainError("PBW consistency is checked on the Verma module");
  PbwCheck out;
  out.report.check = "pbw_consistency";
  const auto& tri = module.triangular();
  const int n = module.rank();
  std::vector<HomogeneousElement> elems;
  for (int r = -1; r <= 1; ++r) {
    for (const auto& a : box(n - 1, radius)) {
      for (auto& g : graded_component(AlgebraKind::Extended, tri.compose(a, r)).basis) elems.push_back(std::move(g));
    }
  }
  auto apply = [&](const HomogeneousElement& x, const LatticeVector& w, const Vector<Scalar>& v,
                   bool& bad) -> ActResult {
    bool leaked = false;
    ActResult r = module.act_full(x, w, v, leaked);
    if (r.status == ActStatus::OutOfWindow || leaked) bad = true;
    return r;
  };
  auto value_or_zero = [&](const ActResult& r) -> Vector<Scalar> { return r.status == ActStatus::Ok ? r.value : Vector<Scalar>(); };
  for (const auto& [w, d] : module.weight_table()) {
    for (Eigen::Index b = 0; b < d; ++b) {
      Vector<Scalar> e = Vector<Scalar>::Zero(d);
      e(b) = Scalar(1);
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
          const auto& x = elems[i];
          const auto& y = elems[j];
          bool bad = false;
          ActResult lhs = apply(bracket(x, y), w, e, bad);
          ActResult yw = apply(y, w, e, bad);
          ActResult xw = apply(x, w, e, bad);
          ActResult xyw;
          ActResult yxw;
          if (yw.status == ActStatus::Ok) xyw = apply(x, yw.weight, yw.value, bad);
          if (xw.status == ActStatus::Ok) yxw = apply(y, xw.weight, xw.value, bad);
          if (bad) {
            ++out.skipped;
            continue;
          }
          Vector<Scalar> l = value_or_zero(lhs);
          Vector<Scalar> a = value_or_zero(xyw);
          Vector<Scalar> c = value_or_zero(yxw);
          const Eigen::Index size = std::max({l.size(), a.size(), c.size()});
          Vector<Scalar> diff = Vector<Scalar>::Zero(size);
          if (l.size()) diff += l;
          if (a.size()) diff -= a;
          if (c.size()) diff += c;
          ++out.report.cases;
          if (!Subspace<Scalar>::is_zero_vector(diff)) {
            out.report.violations.push_back({"weight " + to_string(w) + " basis " + std::to_string(b) + ", x of degree " +
                                             to_string(x.degree) + ", y of degree " + to_string(y.degree)});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace divlie
