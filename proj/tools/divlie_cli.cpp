// divlie: command-line front end.
//
// Exit codes: 0 when every requested check passes, 1 when a check fails,
// 2 on malformed input.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "divlie/io.hpp"
#include "divlie/rank2.hpp"

using namespace divlie;
using io::Json;

namespace {

struct CheckRow {
  std::string check;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> witnesses;
};

struct Outcome {
  Json inputs = Json::object();
  std::vector<CheckRow> checks;
  Json data = Json::object();  // command-specific payload
  Json flags = Json::object();
  std::optional<Json> artifact;   // written by --out
  std::optional<Json> stdout_doc; // replaces the report on stdout (json format)
  std::string table;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

CheckRow from_report(const CheckReport& r) {
  CheckRow row{r.check, r.passed(), r.cases, {}};
  for (std::size_t i = 0; i < r.violations.size() && i < 20; ++i) row.witnesses.push_back(r.violations[i].witness);
  return row;
}

Json report_json(const std::string& command, const Outcome& o, double ms) {
  Json checks = Json::array();
  for (const auto& c : o.checks) {
    checks.push_back({{"check", c.check}, {"status", c.passed ? "pass" : "fail"}, {"cases", c.cases}, {"witnesses", c.witnesses}});
  }
  return {{"schema_version", io::kSchemaVersion},
          {"kind", "report"},
          {"tool_version", io::kToolVersion},
          {"command", command},
          {"inputs", o.inputs},
          {"results", checks},
          {"data", o.data},
          {"flags", o.flags},
          {"status", o.passed() ? "pass" : "fail"},
          {"timing_ms", ms}};
}

std::string checks_table(const std::vector<CheckRow>& checks) {
  std::ostringstream s;
  for (const auto& c : checks) {
    s << std::left << std::setw(28) << c.check << std::setw(6) << (c.passed ? "pass" : "FAIL") << c.cases << " cases\n";
    for (const auto& w : c.witnesses) s << "    " << w << "\n";
  }
  return s.str();
}

/// Aligned multiplicity grid for rank 2 (rows: second coordinate descending),
/// a two-column list otherwise.
std::string weight_grid(const io::WeightTable& table) {
  std::ostringstream s;
  if (table.empty()) return "(empty)\n";
  if (table.begin()->first.size() != 2) {
    for (const auto& [w, d] : table) s << std::left << std::setw(24) << to_string(w) << d << "\n";
    return s.str();
  }
  std::int64_t x0 = INT64_MAX, x1 = INT64_MIN, y0 = INT64_MAX, y1 = INT64_MIN;
  std::size_t width = 1;
  for (const auto& [w, d] : table) {
    x0 = std::min(x0, w(0));
    x1 = std::max(x1, w(0));
    y0 = std::min(y0, w(1));
    y1 = std::max(y1, w(1));
    width = std::max(width, std::to_string(d).size());
  }
  for (std::int64_t x = x0; x <= x1; ++x) width = std::max(width, std::to_string(x).size());
  const int cw = static_cast<int>(width) + 1;
  s << std::setw(6) << "y\\x";
  for (std::int64_t x = x0; x <= x1; ++x) s << std::setw(cw) << x;
  s << "\n";
  for (std::int64_t y = y1; y >= y0; --y) {
    s << std::setw(6) << y;
    for (std::int64_t x = x0; x <= x1; ++x) {
      auto it = table.find(LatticeVector{{x, y}});
      s << std::setw(cw) << (it == table.end() ? std::string(".") : std::to_string(it->second));
    }
    s << "\n";
  }
  return s.str();
}

std::string element_string(const AlgebraElement& x) {
  std::string s;
  for (const auto& h : x.components()) {
    if (!divlie::is_zero(h.u)) s += (s.empty() ? "" : " + ") + std::string("D(") + to_string(h.u) + ", " + to_string(h.degree) + ")";
    if (!h.c.is_zero()) s += (s.empty() ? "" : " + ") + std::string("(") + h.c.str() + ") t^" + to_string(h.degree);
  }
  return s.empty() ? "0" : s;
}

LatticeVector parse_lattice(const std::string& text, const std::string& option) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("expected comma-separated integers, got \"" + text + "\"", option);
    }
  }
  if (v.empty() || static_cast<int>(v.size()) > kMaxRank) throw ParseError("vector rank out of range", option);
  LatticeVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

io::WeightTable jet_table(const JetModule& m, std::int64_t window) {
  io::WeightTable t;
  for (const auto& [s, d] : weight_support(m, window).multiplicity) t[s] = static_cast<Eigen::Index>(d);
  return t;
}

// ---- subcommands ----------------------------------------------------------

struct BracketArgs {
  std::string lhs, rhs;
};
Outcome run_bracket(const BracketArgs& a) {
  Outcome o;
  const AlgebraElement x = io::element_from_json(io::read_file(a.lhs));
  const AlgebraElement y = io::element_from_json(io::read_file(a.rhs));
  if (x.rank() != y.rank()) throw ParseError("operands have ranks " + std::to_string(x.rank()) + " and " + std::to_string(y.rank()), "--rhs");
  const AlgebraElement z = bracket(x, y);
  o.inputs = {{"lhs", io::to_json(x)}, {"rhs", io::to_json(y)}};
  o.data["bracket"] = io::to_json(z);
  o.artifact = io::to_json(z);
  o.stdout_doc = io::to_json(z);
  o.table = element_string(z) + "\n";
  return o;
}

struct GradingArgs {
  int n = 2;
  std::string algebra = "extended";
  std::string degree;
  std::int64_t window = 1;
};
Outcome run_grading(const GradingArgs& a) {
  Outcome o;
  if (a.n < 1 || a.n > kMaxRank) throw ParseError("rank out of range", "--n");
  if (a.window < 0) throw ParseError("must be non-negative", "--window");
  AlgebraKind kind = AlgebraKind::Extended;
  if (a.algebra == "witt") kind = AlgebraKind::Witt;
  else if (a.algebra == "divzero") kind = AlgebraKind::DivZero;
  else if (a.algebra != "extended") throw ParseError("expected witt, divzero or extended", "--algebra");
  o.inputs = {{"n", a.n}, {"algebra", a.algebra}, {"window", a.window}, {"degree", a.degree}};
  std::vector<LatticeVector> degrees;
  if (!a.degree.empty()) {
    LatticeVector m = parse_lattice(a.degree, "--degree");
    if (m.size() != a.n) throw ParseError("degree rank does not match --n", "--degree");
    degrees.push_back(m);
  } else {
    degrees = box(a.n, a.window);
  }
  CheckRow dims{"graded_dimensions", true, 0, {}};
  io::WeightTable table;
  Json comps = Json::array();
  for (const auto& m : degrees) {
    const auto comp = graded_component(kind, m);
    const bool zero = is_zero(m);
    Eigen::Index expected = 0;
    switch (kind) {
      case AlgebraKind::Witt: expected = a.n; break;
      case AlgebraKind::DivZero: expected = zero ? a.n : a.n - 1; break;
      case AlgebraKind::Extended: expected = zero ? a.n + 1 : a.n; break;
    }
    ++dims.cases;
    if (comp.dimension() != expected) {
      dims.passed = false;
      dims.witnesses.push_back("degree " + to_string(m) + ": dimension " + std::to_string(comp.dimension()) + ", expected " + std::to_string(expected));
    }
    table[m] = comp.dimension();
    if (!a.degree.empty()) {
      for (const auto& h : comp.basis) comps.push_back(io::to_json(AlgebraElement(h)));
      std::ostringstream s;
      for (const auto& h : comp.basis) s << element_string(AlgebraElement(h)) << "\n";
      o.table += s.str();
    }
  }
  o.checks.push_back(dims);
  o.data["dimensions"] = io::weight_table_to_json(table);
  if (!a.degree.empty()) o.data["basis"] = comps;
  else o.table = weight_grid(table);
  o.table += checks_table(o.checks);
  return o;
}

struct IrrepArgs {
  int n = 2;
  std::string lambda;
  std::string c;
  std::uint64_t max_dim = 5000;
};
Outcome run_irrep(const IrrepArgs& a) {
  Outcome o;
  if (a.n < 2 || a.n > kMaxRank) throw ParseError("rank out of range", "--n");
  SlWeight w = SlWeight::zero(a.n);
  if (!a.lambda.empty()) {
    LatticeVector marks = parse_lattice(a.lambda, "--lambda");
    if (marks.size() != a.n - 1) throw ParseError("lambda needs n-1 marks", "--lambda");
    for (int i = 0; i < a.n - 1; ++i) {
      if (marks(i) < 0) throw ParseError("marks must be non-negative", "--lambda");
      w.marks[static_cast<std::size_t>(i)] = static_cast<int>(marks(i));
    }
  }
  Scalar c = a.c.empty() ? Scalar(w.boxes()) : parse_scalar(a.c);
  o.inputs = {{"n", a.n}, {"lambda", w.marks}, {"c", io::scalar_to_json(c)}};
  IrrepOptions opts;
  opts.max_dim = a.max_dim;
  Irrep irrep = build_irrep(w, c, opts);
  CheckRow dim{"weyl_dimension", static_cast<std::uint64_t>(irrep.dim()) == weyl_dim(w), 1, {}};
  if (!dim.passed) dim.witnesses.push_back("built " + std::to_string(irrep.dim()) + ", Weyl " + std::to_string(weyl_dim(w)));
  CheckRow rel{"gl_relations", true, static_cast<std::size_t>(a.n * a.n * a.n * a.n), {}};
  for (const auto& v : check_gl_relations(irrep)) {
    rel.passed = false;
    if (rel.witnesses.size() < 20) rel.witnesses.push_back(v);
  }
  o.checks = {dim, rel};
  o.data = {{"dim", irrep.dim()}, {"weyl_dim", weyl_dim(w)}};
  o.artifact = io::to_json(irrep);
  std::ostringstream s;
  s << "V(" << w.str() << "), c = " << c.str() << ", dim " << irrep.dim() << "\n";
  o.table = s.str() + checks_table(o.checks);
  return o;
}

struct JetArgs {
  std::string module;
  std::int64_t window = 1;
  int ghw_k = 1;
};
Outcome run_jet_check(const JetArgs& a) {
  Outcome o;
  if (a.window < 0) throw ParseError("must be non-negative", "--window");
  const auto jd = io::jet_from_json(io::read_file(a.module));
  JetModule m(jd.params, jd.mode);
  o.inputs = {{"module", io::to_json(jd)}, {"window", a.window}};
  o.checks.push_back(from_report(check_module_axiom(m, a.window)));
  o.checks.push_back(from_report(check_associativity(m, a.window)));
  if (jd.mode == JetMode::Extended) o.checks.push_back(from_report(check_two_formulas(m, a.window)));
  const auto verdict = is_irreducible(jd.params, jd.mode);
  o.data["irreducibility"] = {{"verdict", to_string(verdict.verdict)}, {"notes", verdict.notes}};
  o.flags["window_limited"] = true;
  o.table = checks_table(o.checks) + "irreducibility: " + to_string(verdict.verdict) + "\n";
  return o;
}

Outcome run_jet_support(const JetArgs& a) {
  Outcome o;
  if (a.window < 0) throw ParseError("must be non-negative", "--window");
  if (a.ghw_k < 1) throw ParseError("must be positive", "--ghw-k");
  const auto jd = io::jet_from_json(io::read_file(a.module));
  JetModule m(jd.params, jd.mode);
  o.inputs = {{"module", io::to_json(jd)}, {"window", a.window}, {"ghw_k", a.ghw_k}};
  const auto table = jet_table(m, a.window);
  CheckRow constant{"constant_multiplicity", true, table.size(), {}};
  for (const auto& [s, d] : table) {
    if (d != m.fiber_dim()) {
      constant.passed = false;
      constant.witnesses.push_back(to_string(s) + ": " + std::to_string(d));
    }
  }
  o.checks.push_back(constant);
  o.data["weights"] = io::weight_table_to_json(table);
  o.data["base_weight"] = io::coefficients_to_json(jd.params.alpha);
  if (jd.mode == JetMode::Extended) {
    JetWindowModule wm(m, a.window);
    GhwScan scan = detect_ghw_vectors(wm, a.ghw_k);
    o.data["ghw_vectors"] = scan.vectors.size();
    if (!jd.params.e.is_zero()) {
      CheckRow ghw{"no_ghw_vectors", scan.vectors.empty(), scan.tested_weights, {}};
      for (std::size_t i = 0; i < scan.vectors.size() && i < 20; ++i) ghw.witnesses.push_back("weight " + to_string(scan.vectors[i].weight));
      o.checks.push_back(ghw);
    }
  }
  o.flags["window_limited"] = true;
  o.artifact = io::jet_dump(jd, a.window);
  o.table = weight_grid(table) + checks_table(o.checks);
  return o;
}

struct VermaArgs {
  std::string source;
  std::string module;
  int level = 0;
  std::int64_t pbw_radius = 1;
};

// Module described by --source (verma descriptor) or --module (a dump whose
// weight table must match its source).
std::pair<io::VermaDescriptor, TruncatedModule> load_verma(const VermaArgs& a, bool& quotient) {
  quotient = false;
  if (a.source.empty() == a.module.empty()) throw ParseError("give exactly one of --source and --module");
  if (!a.source.empty()) {
    auto d = io::verma_from_json(io::read_file(a.source));
    auto m = io::build(d);
    return {std::move(d), std::move(m)};
  }
  auto dump = io::verma_dump_from_json(io::read_file(a.module));
  auto m = io::build(dump.source);
  if (dump.quotient) m = irreducible_quotient(m);
  if (m.weight_table() != dump.weights) throw ParseError("dump weight table does not match its source", "/weights");
  quotient = dump.quotient;
  return {std::move(dump.source), std::move(m)};
}

Outcome run_verma_build(const VermaArgs& a) {
  Outcome o;
  bool quotient = false;
  auto [desc, m] = load_verma(a, quotient);
  if (quotient) throw ParseError("verma-build expects a Verma module, got a quotient dump", "--module");
  o.inputs = {{"source", io::to_json(desc)}, {"pbw_radius", a.pbw_radius}};
  if (a.pbw_radius > 0) {
    PbwCheck p = check_pbw_consistency(m, a.pbw_radius);
    o.checks.push_back(from_report(p.report));
    o.data["pbw_skipped"] = p.skipped;
  }
  o.data["weights"] = io::weight_table_to_json(m.weight_table(), &m.triangular());
  o.data["ledger"] = io::ledger_to_json(m.ledger());
  o.flags["window_unreliable"] = m.window_unreliable();
  o.artifact = io::verma_dump(desc, m);
  o.table = weight_grid(m.weight_table()) + checks_table(o.checks);
  return o;
}

Outcome run_singular(const VermaArgs& a) {
  Outcome o;
  bool quotient = false;
  auto [desc, m] = load_verma(a, quotient);
  if (quotient) throw ParseError("singular vectors are searched in a Verma module, got a quotient dump", "--module");
  if (a.level < 0 || a.level > m.depth()) throw ParseError("level must lie in 1.." + std::to_string(m.depth()), "--level");
  o.inputs = {{"source", io::to_json(desc)}, {"level", a.level}};
  std::vector<SingularReport> reports;
  const int lo = a.level == 0 ? 1 : a.level;
  const int hi = a.level == 0 ? m.depth() : a.level;
  Json rs = Json::array();
  std::ostringstream s;
  bool unreliable = false;
  for (int l = lo; l <= hi; ++l) {
    reports.push_back(find_singular_vectors(m, l));
    rs.push_back(io::singular_report_to_json(reports.back()));
    unreliable = unreliable || reports.back().window_unreliable;
    s << "level " << l << ": singular dimension " << reports.back().total_dim()
      << (reports.back().window_unreliable ? " (window-unreliable)" : "") << "\n";
    for (const auto& sp : reports.back().spaces) s << "  " << std::left << std::setw(20) << to_string(sp.weight) << sp.basis.cols() << "\n";
  }
  o.data["singular"] = rs;
  o.data["ledger"] = io::ledger_to_json(m.ledger());
  o.flags["window_unreliable"] = unreliable || m.window_unreliable();
  o.artifact = io::verma_dump(desc, m, reports);
  o.table = s.str();
  return o;
}

Outcome run_quotient(const VermaArgs& a) {
  Outcome o;
  bool quotient = false;
  auto [desc, m] = load_verma(a, quotient);
  if (quotient) throw ParseError("module is already a quotient", "--module");
  o.inputs = {{"source", io::to_json(desc)}};
  TruncatedModule q = irreducible_quotient(m);
  CheckRow support{"support_law", true, q.weight_table().size(), {}};
  for (const auto& v : check_support_law(q)) {
    support.passed = false;
    support.witnesses.push_back(v);
  }
  o.checks.push_back(support);
  o.data["weights"] = io::weight_table_to_json(q.weight_table(), &q.triangular());
  o.data["notes"] = q.notes();
  o.data["ledger"] = io::ledger_to_json(q.ledger());
  o.flags["window_unreliable"] = q.window_unreliable();
  o.artifact = io::verma_dump(desc, q);
  o.table = weight_grid(q.weight_table()) + checks_table(o.checks);
  return o;
}

struct ClassifyArgs {
  std::string module;
  std::int64_t bound = 0;
  std::string expect;
};
Outcome run_classify(const ClassifyArgs& a) {
  Outcome o;
  if (a.bound < 0) throw ParseError("must be non-negative", "--bound");
  const Json doc = io::read_file(a.module);
  const std::string kind = io::document_kind(doc);
  ClassifyResult r;
  bool unreliable = false;
  if (kind == "jet_dump") {
    auto dump = io::jet_dump_from_json(doc);
    JetModule m(dump.source.params, dump.source.mode);
    if (jet_table(m, dump.window) != dump.weights) throw ParseError("dump weight table does not match its source", "/weights");
    o.inputs = {{"module", doc}, {"bound", a.bound}};
    r = classify_truncated(JetWindowModule(m, dump.window), a.bound);
  } else if (kind == "verma_dump") {
    VermaArgs va;
    va.module = a.module;
    bool quotient = false;
    auto [desc, m] = load_verma(va, quotient);
    o.inputs = {{"module", doc}, {"bound", a.bound}};
    r = classify_truncated(m, a.bound);
    unreliable = m.window_unreliable();
  } else {
    throw ParseError("expected a jet_dump or verma_dump, got \"" + kind + "\"", "/kind");
  }
  o.data = {{"verdict", to_string(r.verdict)}, {"max_multiplicity", r.max_multiplicity}, {"notes", r.notes}};
  if (r.ghw_k) o.data["ghw_k"] = *r.ghw_k;
  o.data["ghw_vectors"] = r.ghw_vectors;
  o.flags = {{"window_limited", r.window_limited}, {"window_unreliable", unreliable}};
  if (!a.expect.empty()) {
    if (a.expect != "GHW" && a.expect != "CuspidalConsistent" && a.expect != "Inconclusive") {
      throw ParseError("expected GHW, CuspidalConsistent or Inconclusive", "--expect");
    }
    CheckRow row{"expected_verdict", to_string(r.verdict) == a.expect, 1, {}};
    if (!row.passed) row.witnesses.push_back("got " + to_string(r.verdict));
    o.checks.push_back(row);
  }
  o.table = to_string(r.verdict) + "\n" + checks_table(o.checks);
  return o;
}

struct HalfplaneArgs {
  std::string alpha = "0,1,2,1";
  std::int64_t window = 10;
  int density = 50;
  std::uint64_t seed = 1;
};
Outcome run_halfplane(const HalfplaneArgs& a) {
  Outcome o;
  if (a.window < 1) throw ParseError("must be at least 1", "--window");
  if (a.density < 0) throw ParseError("must be non-negative", "--density");
  LatticeVector d = parse_lattice(a.alpha, "--alpha");
  if (d.size() != 4) throw ParseError("expected a,b,d,q for alpha = (a + b sqrt d) / q", "--alpha");
  QuadraticIrrational alpha = [&] {
    try {
      return QuadraticIrrational(mpz_class(static_cast<long>(d(0))), mpz_class(static_cast<long>(d(1))),
                                 mpz_class(static_cast<long>(d(2))), mpz_class(static_cast<long>(d(3))));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), "--alpha");
    }
  }();
  o.inputs = {{"alpha", {{"a", d(0)}, {"b", d(1)}, {"d", d(2)}, {"q", d(3)}}}, {"window", a.window}, {"density", a.density}, {"seed", a.seed}};
  const HalfPlanes h = alpha_halfplane(alpha, a.window);
  std::set<std::pair<std::int64_t, std::int64_t>> pos;
  for (const auto& v : h.positive) pos.insert({v(0), v(1)});

  CheckRow anti{"antisymmetry", true, 0, {}};
  for (const auto& v : box(2, a.window)) {
    if (is_zero(v)) continue;
    ++anti.cases;
    if (pos.count({v(0), v(1)}) == pos.count({-v(0), -v(1)})) {
      anti.passed = false;
      anti.witnesses.push_back(to_string(v));
    }
  }
  CheckRow closed{"additive_closure", true, 0, {}};
  auto in_window = [&](const LatticeVector& v) { return sup_norm(v) <= a.window; };
  for (const auto* half : {&h.positive, &h.negative}) {
    const bool positive = half == &h.positive;
    for (const auto& x : *half) {
      for (const auto& y : *half) {
        const LatticeVector z = x + y;
        if (!in_window(z)) continue;
        ++closed.cases;
        if ((pos.count({z(0), z(1)}) == 1) != positive) {
          closed.passed = false;
          if (closed.witnesses.size() < 20) closed.witnesses.push_back(to_string(x) + " + " + to_string(y));
        }
      }
    }
  }
  CheckRow dense{"density", true, 0, {}};
  std::mt19937_64 rng(a.seed);
  Json found = Json::array();
  for (int i = 0; i < a.density && !h.positive.empty(); ++i) {
    const LatticeVector& x = h.positive[rng() % h.positive.size()];
    ++dense.cases;
    auto between = alpha_between(alpha, x, 4 * a.window);
    if (!between) {
      dense.passed = false;
      dense.witnesses.push_back("nothing between 0 and " + to_string(x));
    } else {
      found.push_back({{"x", io::lattice_to_json(x)}, {"between", io::lattice_to_json(*between)}});
    }
  }
  o.checks = {anti, closed, dense};
  Json p = Json::array();
  Json n = Json::array();
  for (const auto& v : h.positive) p.push_back(io::lattice_to_json(v));
  for (const auto& v : h.negative) n.push_back(io::lattice_to_json(v));
  o.data = {{"positive", p}, {"negative", n}, {"density_witnesses", found}};
  io::WeightTable grid;
  for (const auto& v : h.positive) grid[v] = 1;
  for (const auto& v : h.negative) grid[v] = 0;
  o.table = "1 = Z^2(+), 0 = Z^2(-)\n" + weight_grid(grid) + checks_table(o.checks);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the extended divergence-zero algebra and its weight modules"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string out;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", out, "Write the primary artifact (element, descriptor, dump or report) to this file");

  BracketArgs ba;
  auto* bracket_cmd = app.add_subcommand("bracket", "Bracket of two elements");
  bracket_cmd->add_option("--lhs", ba.lhs, "Element JSON")->required();
  bracket_cmd->add_option("--rhs", ba.rhs, "Element JSON")->required();

  GradingArgs ga;
  auto* grading_cmd = app.add_subcommand("grading", "Graded components and their dimensions");
  grading_cmd->add_option("--n", ga.n, "Rank")->required();
  grading_cmd->add_option("--algebra", ga.algebra, "witt, divzero or extended");
  grading_cmd->add_option("--degree", ga.degree, "One degree, e.g. 1,-2 (prints its basis)");
  grading_cmd->add_option("--window", ga.window, "Degrees in [-window, window]^n");

  IrrepArgs ia;
  auto* irrep_cmd = app.add_subcommand("irrep", "Build V(lambda, c) and verify it");
  irrep_cmd->add_option("--n", ia.n, "Rank")->required();
  irrep_cmd->add_option("--lambda", ia.lambda, "Marks, e.g. 1,0");
  irrep_cmd->add_option("--c", ia.c, "Central scalar (default: number of boxes)");
  irrep_cmd->add_option("--max-dim", ia.max_dim, "Dimension cap");

  JetArgs ja;
  auto* jet_check_cmd = app.add_subcommand("jet-check", "Module axiom, associativity and two-formula checks");
  jet_check_cmd->add_option("--module", ja.module, "Jet descriptor JSON")->required();
  jet_check_cmd->add_option("--window", ja.window, "Window radius");
  auto* jet_support_cmd = app.add_subcommand("jet-support", "Weight support and GHW scan of a jet module");
  jet_support_cmd->add_option("--module", ja.module, "Jet descriptor JSON")->required();
  jet_support_cmd->add_option("--window", ja.window, "Window radius");
  jet_support_cmd->add_option("--ghw-k", ja.ghw_k, "GHW cone parameter");

  VermaArgs va;
  auto add_verma_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--source", va.source, "Verma descriptor JSON");
    cmd->add_option("--module", va.module, "Verma dump JSON");
  };
  auto* verma_cmd = app.add_subcommand("verma-build", "Build a truncated generalized Verma module");
  add_verma_inputs(verma_cmd);
  verma_cmd->add_option("--pbw-radius", va.pbw_radius, "PBW consistency radius (0 skips the check)");
  auto* singular_cmd = app.add_subcommand("singular", "Singular vectors per level");
  add_verma_inputs(singular_cmd);
  singular_cmd->add_option("--level", va.level, "Level (default: all)");
  auto* quotient_cmd = app.add_subcommand("quotient", "Irreducible quotient and support law");
  add_verma_inputs(quotient_cmd);

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Cuspidal / GHW classification of a dump");
  classify_cmd->add_option("--module", ca.module, "jet_dump or verma_dump JSON")->required();
  classify_cmd->add_option("--bound", ca.bound, "Multiplicity bound")->required();
  classify_cmd->add_option("--expect", ca.expect, "Fail unless the verdict matches");

  HalfplaneArgs ha;
  auto* half_cmd = app.add_subcommand("halfplane", "alpha-order half-planes of Z^2");
  half_cmd->add_option("--alpha", ha.alpha, "a,b,d,q for alpha = (a + b sqrt d) / q");
  half_cmd->add_option("--window", ha.window, "Window radius");
  half_cmd->add_option("--density", ha.density, "Random positive pairs for the density check");
  half_cmd->add_option("--seed", ha.seed, "Seed for the density sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("DIVLIE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      std::cerr << "error: DIVLIE_THREADS must be a positive integer\n";
      return 2;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string command;
  try {
    if (bracket_cmd->parsed()) { command = "bracket"; outcome = run_bracket(ba); }
    else if (grading_cmd->parsed()) { command = "grading"; outcome = run_grading(ga); }
    else if (irrep_cmd->parsed()) { command = "irrep"; outcome = run_irrep(ia); }
    else if (jet_check_cmd->parsed()) { command = "jet-check"; outcome = run_jet_check(ja); }
    else if (jet_support_cmd->parsed()) { command = "jet-support"; outcome = run_jet_support(ja); }
    else if (verma_cmd->parsed()) { command = "verma-build"; outcome = run_verma_build(va); }
    else if (singular_cmd->parsed()) { command = "singular"; outcome = run_singular(va); }
    else if (quotient_cmd->parsed()) { command = "quotient"; outcome = run_quotient(va); }
    else if (classify_cmd->parsed()) { command = "classify"; outcome = run_classify(ca); }
    else { command = "halfplane"; outcome = run_halfplane(ha); }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const Json report = report_json(command, outcome, std::round(ms * 1000) / 1000);

  if (!out.empty()) {
    try {
      io::write_file(out, outcome.artifact ? *outcome.artifact : report);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  if (format == "table") {
    std::cout << outcome.table;
  } else {
    std::cout << io::dump(outcome.stdout_doc ? *outcome.stdout_doc : report);
  }
  return outcome.passed() ? 0 : 1;
}
