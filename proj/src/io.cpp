#include "divlie/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace divlie::io {

namespace {

std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string join(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

// Field access that remembers which keys were read, so leftovers can be
// rejected as unknown.
class Object {
 public:
  Object(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) throw ParseError("expected an object", path_.empty() ? "/" : path_);
  }

  const Json& at(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) throw ParseError("missing field", join(path_, key));
    used_.insert(key);
    return *it;
  }
  const Json* find(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    used_.insert(key);
    return &*it;
  }
  std::string path(const std::string& key) const { return join(path_, key); }
  const std::string& path() const { return path_; }

  void done() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!used_.count(it.key())) throw ParseError("unknown field", join(path_, it.key()));
    }
  }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> used_;
};

void header(Object& o, const std::string& kind) {
  const Json& v = o.at("schema_version");
  if (!v.is_number_integer() || v.get<std::int64_t>() != kSchemaVersion) {
    throw ParseError("unsupported schema version " + v.dump() + ", expected " + std::to_string(kSchemaVersion),
                     o.path("schema_version"));
  }
  const Json& k = o.at("kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw ParseError("expected kind \"" + kind + "\", got " + k.dump(), o.path("kind"));
  }
}

Json with_header(const std::string& kind, Json body) {
  body["schema_version"] = kSchemaVersion;
  body["kind"] = kind;
  return body;
}

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(j.get<std::uint64_t>());
    return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    mpz_class z;
    const std::string s = j.get<std::string>();
    const std::string digits = !s.empty() && (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || z.set_str(s[0] == '+' ? digits : s, 10) != 0) {
      throw ParseError("not an integer: " + j.dump(), path);
    }
    return z;
  }
  throw ParseError("expected an integer, got " + j.dump(), path);
}

std::int64_t int64_from_json(const Json& j, const std::string& path) {
  const mpz_class z = integer_from_json(j, path);
  if (!z.fits_slong_p()) throw ParseError("integer out of range", path);
  return z.get_si();
}

int int_from_json(const Json& j, const std::string& path) {
  const std::int64_t v = int64_from_json(j, path);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ParseError("integer out of range", path);
  }
  return static_cast<int>(v);
}

bool bool_from_json(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw ParseError("expected true or false", path);
  return j.get<bool>();
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError("expected an array", path);
  return j;
}

Rational rational_from(const Json& num, const Json& den, const std::string& path) {
  const mpz_class d = integer_from_json(den, path);
  if (d == 0) throw ParseError("zero denominator", path);
  return Rational(mpq_class(integer_from_json(num, path), d));
}

SlWeight lambda_from_json(const Json& j, const std::string& path, int n) {
  array(j, path);
  if (static_cast<int>(j.size()) != n - 1) {
    throw ParseError("lambda needs " + std::to_string(n - 1) + " marks", path);
  }
  SlWeight w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int m = int_from_json(j[i], join(path, i));
    if (m < 0) throw ParseError("marks must be non-negative", join(path, i));
    w.marks.push_back(m);
  }
  return w;
}

Json lambda_to_json(const SlWeight& w) { return Json(w.marks); }

int rank_from_json(Object& o) {
  const int n = int_from_json(o.at("n"), o.path("n"));
  if (n < 1 || n > kMaxRank) throw ParseError("rank must lie in 1.." + std::to_string(kMaxRank), o.path("n"));
  return n;
}

Json jet_body(const JetDescriptor& jet) {
  Json j;
  j["n"] = jet.params.rank();
  j["lambda"] = lambda_to_json(jet.params.lambda);
  j["c"] = scalar_to_json(jet.params.c);
  j["alpha"] = coefficients_to_json(jet.params.alpha);
  j["e"] = scalar_to_json(jet.params.e);
  j["mode"] = jet.mode == JetMode::Extended ? "extended" : "witt_extended";
  return j;
}

JetDescriptor jet_body_from(Object& o) {
  JetDescriptor out;
  const int n = rank_from_json(o);
  if (n < 2) throw ParseError("jet modules need n >= 2", o.path("n"));
  out.params.lambda = lambda_from_json(o.at("lambda"), o.path("lambda"), n);
  out.params.c = scalar_from_json(o.at("c"), o.path("c"));
  out.params.alpha = coefficients_from_json(o.at("alpha"), o.path("alpha"), n);
  out.params.e = scalar_from_json(o.at("e"), o.path("e"));
  if (const Json* m = o.find("mode")) {
    const std::string s = m->is_string() ? m->get<std::string>() : "";
    if (s == "extended") {
      out.mode = JetMode::Extended;
    } else if (s == "witt_extended") {
      out.mode = JetMode::WittExtended;
    } else {
      throw ParseError("mode must be \"extended\" or \"witt_extended\"", o.path("mode"));
    }
  }
  return out;
}

Json triangular_body(const TriangularData& tri) {
  Json j;
  j["m_basis"] = Json::array();
  for (const auto& m : tri.m_basis()) j["m_basis"].push_back(lattice_to_json(m));
  j["beta"] = lattice_to_json(tri.beta());
  return j;
}

TriangularData triangular_body_from(Object& o) {
  const LatticeVector beta = lattice_from_json(o.at("beta"), o.path("beta"));
  const Json& mb = array(o.at("m_basis"), o.path("m_basis"));
  std::vector<LatticeVector> basis;
  for (std::size_t i = 0; i < mb.size(); ++i) {
    basis.push_back(lattice_from_json(mb[i], join(o.path("m_basis"), i), static_cast<int>(beta.size())));
  }
  try {
    return make_triangular(std::move(basis), beta);
  } catch (const Error& e) {
    throw ParseError(e.what(), o.path("m_basis"));
  }
}

Json verma_body(const VermaDescriptor& v) {
  Json j;
  Json x;
  if (v.inducing.kind == InducingModule::Kind::Character) {
    x["kind"] = "character";
    x["lambda0"] = coefficients_to_json(v.inducing.lambda0);
    x["c0"] = scalar_to_json(v.inducing.c0);
  } else {
    x["kind"] = "jet_restriction";
    x["jet"] = jet_body({*v.inducing.jet, JetMode::Extended});
    x["s0"] = lattice_to_json(v.inducing.s0);
    x["x_window"] = v.inducing.x_window;
  }
  j["inducing"] = std::move(x);
  j["triangular"] = triangular_body(v.triangular);
  j["depth"] = v.depth;
  j["window"] = v.window;
  return j;
}

VermaDescriptor verma_body_from(Object& o) {
  Object tri(o.at("triangular"), o.path("triangular"));
  TriangularData t = triangular_body_from(tri);
  tri.done();
  Object x(o.at("inducing"), o.path("inducing"));
  const Json& kind = x.at("kind");
  InducingModule inducing;
  if (kind == "character") {
    inducing = InducingModule::character(coefficients_from_json(x.at("lambda0"), x.path("lambda0"), t.rank()),
                                         scalar_from_json(x.at("c0"), x.path("c0")));
  } else if (kind == "jet_restriction") {
    Object jet(x.at("jet"), x.path("jet"));
    JetDescriptor jd = jet_body_from(jet);
    jet.done();
    if (jd.mode != JetMode::Extended) throw ParseError("the inducing jet module must use mode \"extended\"", jet.path("mode"));
    if (jd.params.rank() != t.rank()) throw ParseError("rank does not match the triangular data", jet.path("n"));
    const LatticeVector s0 = lattice_from_json(x.at("s0"), x.path("s0"), t.rank());
    const std::int64_t w = int64_from_json(x.at("x_window"), x.path("x_window"));
    if (w < 0) throw ParseError("must be non-negative", x.path("x_window"));
    inducing = InducingModule::jet_restriction(jd.params, s0, w);
  } else {
    throw ParseError("inducing kind must be \"character\" or \"jet_restriction\"", x.path("kind"));
  }
  x.done();
  const int depth = int_from_json(o.at("depth"), o.path("depth"));
  if (depth < 0) throw ParseError("must be non-negative", o.path("depth"));
  const std::int64_t window = int64_from_json(o.at("window"), o.path("window"));
  if (window < 1) throw ParseError("must be at least 1", o.path("window"));
  return VermaDescriptor{std::move(inducing), std::move(t), depth, window};
}

WeightTable weight_table_from(const Json& j, const std::string& path, int rank) {
  WeightTable out;
  array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    Object e(j[i], join(path, i));
    const LatticeVector w = lattice_from_json(e.at("weight"), e.path("weight"), rank);
    const std::int64_t d = int64_from_json(e.at("dim"), e.path("dim"));
    if (d <= 0) throw ParseError("dimension must be positive", e.path("dim"));
    e.find("level");
    e.done();
    if (!out.emplace(w, static_cast<Eigen::Index>(d)).second) throw ParseError("duplicate weight", e.path("weight"));
  }
  return out;
}

}  // namespace

Json scalar_to_json(const Scalar& x) {
  return Json::array({integer_to_json(x.real().numerator()), integer_to_json(x.real().denominator()),
                      integer_to_json(x.imag().numerator()), integer_to_json(x.imag().denominator())});
}

Scalar scalar_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
      throw ParseError(e.what(), path);
    }
  }
  if (j.is_number_integer()) return Scalar(Rational(integer_from_json(j, path)));
  if (j.is_array() && j.size() == 4) {
    return Scalar(rational_from(j[0], j[1], path), rational_from(j[2], j[3], path));
  }
  throw ParseError("expected a scalar [re_num, re_den, im_num, im_den], an integer or a string", path);
}

Json lattice_to_json(const LatticeVector& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.size(); ++i) out.push_back(m(i));
  return out;
}

LatticeVector lattice_from_json(const Json& j, const std::string& path, int rank) {
  array(j, path);
  if (j.empty() || static_cast<int>(j.size()) > kMaxRank) throw ParseError("lattice vector rank out of range", path);
  if (rank >= 0 && static_cast<int>(j.size()) != rank) {
    throw ParseError("expected " + std::to_string(rank) + " entries, got " + std::to_string(j.size()), path);
  }
  LatticeVector out(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) out(static_cast<Eigen::Index>(i)) = int64_from_json(j[i], join(path, i));
  return out;
}

Json coefficients_to_json(const CoefficientVector& u) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < u.size(); ++i) out.push_back(scalar_to_json(u(i)));
  return out;
}

CoefficientVector coefficients_from_json(const Json& j, const std::string& path, int rank) {
  array(j, path);
  if (j.empty() || static_cast<int>(j.size()) > kMaxRank) throw ParseError("vector rank out of range", path);
  if (rank >= 0 && static_cast<int>(j.size()) != rank) {
    throw ParseError("expected " + std::to_string(rank) + " entries, got " + std::to_string(j.size()), path);
  }
  CoefficientVector out(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) out(static_cast<Eigen::Index>(i)) = scalar_from_json(j[i], join(path, i));
  return out;
}

std::string document_kind(const Json& j) {
  if (!j.is_object()) throw ParseError("expected an object", "/");
  auto v = j.find("schema_version");
  if (v == j.end()) throw ParseError("missing field", "/schema_version");
  if (!v->is_number_integer() || v->get<std::int64_t>() != kSchemaVersion) {
    throw ParseError("unsupported schema version " + v->dump() + ", expected " + std::to_string(kSchemaVersion),
                     "/schema_version");
  }
  auto k = j.find("kind");
  if (k == j.end() || !k->is_string()) throw ParseError("missing or non-string field", "/kind");
  return k->get<std::string>();
}

Json to_json(const AlgebraElement& x) {
  Json j;
  j["n"] = x.rank();
  j["d_terms"] = Json::array();
  for (const auto& [m, u] : x.d_terms()) j["d_terms"].push_back({{"degree", lattice_to_json(m)}, {"u", coefficients_to_json(u)}});
  j["t_terms"] = Json::array();
  for (const auto& [m, c] : x.t_terms()) j["t_terms"].push_back({{"degree", lattice_to_json(m)}, {"coeff", scalar_to_json(c)}});
  return with_header("element", std::move(j));
}

AlgebraElement element_from_json(const Json& j) {
  Object o(j, "");
  header(o, "element");
  const int n = rank_from_json(o);
  AlgebraElement out(n);
  const Json& d = array(o.at("d_terms"), o.path("d_terms"));
  for (std::size_t i = 0; i < d.size(); ++i) {
    Object t(d[i], join(o.path("d_terms"), i));
    out.add_D(coefficients_from_json(t.at("u"), t.path("u"), n), lattice_from_json(t.at("degree"), t.path("degree"), n));
    t.done();
  }
  const Json& tt = array(o.at("t_terms"), o.path("t_terms"));
  for (std::size_t i = 0; i < tt.size(); ++i) {
    Object t(tt[i], join(o.path("t_terms"), i));
    out.add_t(scalar_from_json(t.at("coeff"), t.path("coeff")), lattice_from_json(t.at("degree"), t.path("degree"), n));
    t.done();
  }
  o.done();
  return out;
}

Json to_json(const Irrep& irrep) {
  const int n = irrep.rank();
  Json j;
  j["n"] = n;
  j["lambda"] = lambda_to_json(irrep.highest_weight());
  j["c"] = scalar_to_json(irrep.central_scalar());
  j["dim"] = irrep.dim();
  j["gl_weights"] = Json::array();
  for (const auto& w : irrep.gl_weights()) j["gl_weights"].push_back(lattice_to_json(w));
  j["E"] = Json::array();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Matrix<Scalar> dense = Matrix<Scalar>(irrep.E(a, b));
      Json rows = Json::array();
      for (Eigen::Index r = 0; r < dense.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < dense.cols(); ++c) row.push_back(scalar_to_json(dense(r, c)));
        rows.push_back(std::move(row));
      }
      j["E"].push_back({{"i", a + 1}, {"j", b + 1}, {"matrix", std::move(rows)}});
    }
  }
  return with_header("irrep", std::move(j));
}

Irrep irrep_from_json(const Json& j) {
  Object o(j, "");
  header(o, "irrep");
  const int n = rank_from_json(o);
  if (n < 2) throw ParseError("irreps need n >= 2", o.path("n"));
  SlWeight lambda = lambda_from_json(o.at("lambda"), o.path("lambda"), n);
  const Scalar c = scalar_from_json(o.at("c"), o.path("c"));
  const std::int64_t dim = int64_from_json(o.at("dim"), o.path("dim"));
  if (dim < 1) throw ParseError("dimension must be positive", o.path("dim"));
  const Json& gw = array(o.at("gl_weights"), o.path("gl_weights"));
  if (static_cast<std::int64_t>(gw.size()) != dim) throw ParseError("expected one weight per basis vector", o.path("gl_weights"));
  std::vector<LatticeVector> weights;
  for (std::size_t i = 0; i < gw.size(); ++i) weights.push_back(lattice_from_json(gw[i], join(o.path("gl_weights"), i), n));

  std::vector<RationalOperator> off(static_cast<std::size_t>(n * n), RationalOperator(dim, dim));
  std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
  std::vector<Matrix<Scalar>> dense(static_cast<std::size_t>(n * n));
  const Json& es = array(o.at("E"), o.path("E"));
  for (std::size_t k = 0; k < es.size(); ++k) {
    Object e(es[k], join(o.path("E"), k));
    const int a = int_from_json(e.at("i"), e.path("i")) - 1;
    const int b = int_from_json(e.at("j"), e.path("j")) - 1;
    if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError("index out of range", e.path("i"));
    const std::size_t slot = static_cast<std::size_t>(a * n + b);
    if (seen[slot]) throw ParseError("duplicate E_ij", e.path("i"));
    seen[slot] = true;
    const Json& rows = array(e.at("matrix"), e.path("matrix"));
    if (static_cast<std::int64_t>(rows.size()) != dim) throw ParseError("matrix has the wrong number of rows", e.path("matrix"));
    Matrix<Scalar> m(dim, dim);
    std::vector<Eigen::Triplet<Rational>> trips;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string rp = join(e.path("matrix"), r);
      const Json& row = array(rows[r], rp);
      if (static_cast<std::int64_t>(row.size()) != dim) throw ParseError("row has the wrong length", rp);
      for (std::size_t cidx = 0; cidx < row.size(); ++cidx) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cidx)) = scalar_from_json(row[cidx], join(rp, cidx));
        const Scalar& v = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cidx));
        if (a != b && !v.is_zero()) {
          if (!v.is_real()) throw ParseError("off-diagonal entries must be rational", join(rp, cidx));
          trips.emplace_back(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cidx), v.real());
        }
      }
    }
    if (a != b) off[slot].setFromTriplets(trips.begin(), trips.end());
    dense[slot] = std::move(m);
    e.done();
  }
  for (std::size_t s = 0; s < seen.size(); ++s) {
    if (!seen[s]) throw ParseError("missing E_" + std::to_string(s / n + 1) + std::to_string(s % n + 1), o.path("E"));
  }
  o.done();
  if (static_cast<std::uint64_t>(dim) != weyl_dim(lambda)) {
    throw ParseError("dimension " + std::to_string(dim) + " differs from the Weyl dimension " + std::to_string(weyl_dim(lambda)),
                     "/dim");
  }
  Irrep out(std::move(lambda), c, std::move(weights), std::move(off));
  if (const auto bad = check_gl_relations(out); !bad.empty()) {
    throw ParseError("operators violate the gl relations: " + bad.front(), o.path("E"));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!(Matrix<Scalar>(out.E(a, b)) == dense[static_cast<std::size_t>(a * n + b)])) {
        throw ParseError("E_" + std::to_string(a + 1) + std::to_string(b + 1) +
                             " disagrees with the gl weights and central scalar",
                         o.path("E"));
      }
    }
  }
  return out;
}

bool same_irrep(const Irrep& a, const Irrep& b) {
  if (a.rank() != b.rank() || a.dim() != b.dim() || !(a.highest_weight() == b.highest_weight()) ||
      !(a.central_scalar() == b.central_scalar())) {
    return false;
  }
  for (int i = 0; i < a.rank(); ++i) {
    for (int j = 0; j < a.rank(); ++j) {
      if (!(Matrix<Scalar>(a.E(i, j)) == Matrix<Scalar>(b.E(i, j)))) return false;
    }
  }
  return true;
}

Json to_json(const JetDescriptor& jet) { return with_header("jet", jet_body(jet)); }

JetDescriptor jet_from_json(const Json& j) {
  Object o(j, "");
  header(o, "jet");
  JetDescriptor out = jet_body_from(o);
  o.done();
  return out;
}

Json to_json(const TriangularData& tri) { return with_header("triangular", triangular_body(tri)); }

TriangularData triangular_from_json(const Json& j) {
  Object o(j, "");
  header(o, "triangular");
  TriangularData out = triangular_body_from(o);
  o.done();
  return out;
}

Json to_json(const VermaDescriptor& v) { return with_header("verma", verma_body(v)); }

VermaDescriptor verma_from_json(const Json& j) {
  Object o(j, "");
  header(o, "verma");
  VermaDescriptor out = verma_body_from(o);
  o.done();
  return out;
}

TruncatedModule build(const VermaDescriptor& v) { return build_verma(v.inducing, v.triangular, v.depth, v.window); }

Json weight_table_to_json(const WeightTable& table, const TriangularData* tri) {
  Json out = Json::array();
  for (const auto& [w, d] : table) {
    Json e{{"weight", lattice_to_json(w)}, {"dim", d}};
    if (tri) e["level"] = tri->level(w);
    out.push_back(std::move(e));
  }
  return out;
}

Json jet_dump(const JetDescriptor& source, std::int64_t window) {
  JetModule module(source.params, source.mode);
  WeightTable table;
  for (const auto& [s, d] : weight_support(module, window).multiplicity) table[s] = static_cast<Eigen::Index>(d);
  Json j;
  j["source"] = jet_body(source);
  j["window"] = window;
  j["base_weight"] = coefficients_to_json(source.params.alpha);
  j["weights"] = weight_table_to_json(table);
  return with_header("jet_dump", std::move(j));
}

JetDump jet_dump_from_json(const Json& j) {
  Object o(j, "");
  header(o, "jet_dump");
  JetDump out;
  Object src(o.at("source"), o.path("source"));
  out.source = jet_body_from(src);
  src.done();
  out.window = int64_from_json(o.at("window"), o.path("window"));
  if (out.window < 0) throw ParseError("must be non-negative", o.path("window"));
  coefficients_from_json(o.at("base_weight"), o.path("base_weight"), out.source.params.rank());
  out.weights = weight_table_from(o.at("weights"), o.path("weights"), out.source.params.rank());
  o.done();
  return out;
}

Json singular_report_to_json(const SingularReport& r) {
  Json spaces = Json::array();
  for (const auto& s : r.spaces) {
    Json basis = Json::array();
    for (Eigen::Index c = 0; c < s.basis.cols(); ++c) {
      Json col = Json::array();
      for (Eigen::Index i = 0; i < s.basis.rows(); ++i) col.push_back(scalar_to_json(s.basis(i, c)));
      basis.push_back(std::move(col));
    }
    spaces.push_back({{"weight", lattice_to_json(s.weight)},
                      {"dim", s.basis.cols()},
                      {"unreliable", s.unreliable},
                      {"basis", std::move(basis)}});
  }
  return {{"level", r.level},
          {"total_dim", r.total_dim()},
          {"window_unreliable", r.window_unreliable},
          {"spaces", std::move(spaces)}};
}

Json ledger_to_json(const LeakageLedger& ledger) {
  Json out = Json::array();
  for (const auto& [k, v] : ledger.entries) out.push_back({{"term", k}, {"count", v}});
  return out;
}

Json verma_dump(const VermaDescriptor& source, const TruncatedModule& module,
                const std::vector<SingularReport>& singular) {
  Json j;
  j["source"] = verma_body(source);
  j["quotient"] = module.is_quotient();
  j["base_weight"] = coefficients_to_json(module.base_weight());
  j["weights"] = weight_table_to_json(module.weight_table(), &module.triangular());
  j["x_weights"] = weight_table_to_json(module.x_weights());
  j["singular"] = Json::array();
  for (const auto& r : singular) j["singular"].push_back(singular_report_to_json(r));
  j["ledger"] = ledger_to_json(module.ledger());
  j["window_unreliable"] = module.window_unreliable();
  j["notes"] = module.notes();
  return with_header("verma_dump", std::move(j));
}

VermaDump verma_dump_from_json(const Json& j) {
  Object o(j, "");
  header(o, "verma_dump");
  Object src(o.at("source"), o.path("source"));
  VermaDump out{verma_body_from(src)};
  src.done();
  const int n = out.source.triangular.rank();
  out.quotient = bool_from_json(o.at("quotient"), o.path("quotient"));
  coefficients_from_json(o.at("base_weight"), o.path("base_weight"), n);
  out.weights = weight_table_from(o.at("weights"), o.path("weights"), n);
  weight_table_from(o.at("x_weights"), o.path("x_weights"), n);
  const Json& sing = array(o.at("singular"), o.path("singular"));
  for (std::size_t i = 0; i < sing.size(); ++i) {
    Object r(sing[i], join(o.path("singular"), i));
    SingularReport rep;
    rep.level = int_from_json(r.at("level"), r.path("level"));
    int64_from_json(r.at("total_dim"), r.path("total_dim"));
    rep.window_unreliable = bool_from_json(r.at("window_unreliable"), r.path("window_unreliable"));
    const Json& spaces = array(r.at("spaces"), r.path("spaces"));
    for (std::size_t k = 0; k < spaces.size(); ++k) {
      Object s(spaces[k], join(r.path("spaces"), k));
      SingularSpace sp;
      sp.weight = lattice_from_json(s.at("weight"), s.path("weight"), n);
      sp.unreliable = bool_from_json(s.at("unreliable"), s.path("unreliable"));
      const std::int64_t dim = int64_from_json(s.at("dim"), s.path("dim"));
      const Json& basis = array(s.at("basis"), s.path("basis"));
      if (static_cast<std::int64_t>(basis.size()) != dim) throw ParseError("expected dim basis vectors", s.path("basis"));
      const auto rows = out.weights.count(sp.weight) ? out.weights.at(sp.weight) : 0;
      sp.basis = Matrix<Scalar>(rows, static_cast<Eigen::Index>(dim));
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const std::string cp = join(s.path("basis"), c);
        const Json& col = array(basis[c], cp);
        if (static_cast<Eigen::Index>(col.size()) != rows) throw ParseError("vector length does not match the weight space", cp);
        for (std::size_t i = 0; i < col.size(); ++i) {
          sp.basis(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = scalar_from_json(col[i], join(cp, i));
        }
      }
      s.done();
      rep.spaces.push_back(std::move(sp));
    }
    r.done();
    out.singular.push_back(std::move(rep));
  }
  const Json& ledger = array(o.at("ledger"), o.path("ledger"));
  for (std::size_t i = 0; i < ledger.size(); ++i) {
    Object e(ledger[i], join(o.path("ledger"), i));
    if (!e.at("term").is_string()) throw ParseError("expected a string", e.path("term"));
    int64_from_json(e.at("count"), e.path("count"));
    e.done();
  }
  out.window_unreliable = bool_from_json(o.at("window_unreliable"), o.path("window_unreliable"));
  const Json& notes = array(o.at("notes"), o.path("notes"));
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (!notes[i].is_string()) throw ParseError("expected a string", join(o.path("notes"), i));
  }
  o.done();
  return out;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << dump(j);
}

}  // namespace divlie::io
