#include <doctest.h>

#include <cstdio>
#include <functional>
#include <random>

#include "divlie/io.hpp"

using namespace divlie;
using io::Json;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 6);
  return Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

AlgebraElement random_element(std::mt19937_64& rng, int n) {
  AlgebraElement x(n);
  std::uniform_int_distribution<int> terms(0, 3);
  const auto degrees = box(n, 2);
  for (int k = terms(rng); k > 0; --k) {
    const auto& m = degrees[rng() % degrees.size()];
    const auto comp = graded_component(AlgebraKind::Extended, m);
    x.add(comp.basis[rng() % comp.basis.size()]);
    if (!divlie::is_zero(m)) x.add_t(random_scalar(rng), m);
  }
  return x;
}

std::string field_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.field();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("scalar encoding") {
  const Scalar third = parse_scalar("1/3");
  CHECK(io::scalar_to_json(third) == Json::array({1, 3, 0, 1}));
  CHECK(io::scalar_from_json(io::scalar_to_json(third)) == third);
  CHECK(io::scalar_from_json(Json("1/3")) == third);
  CHECK(io::scalar_from_json(Json(5)) == Scalar(5));
  CHECK(io::scalar_from_json(Json("2-1/5i")) == Scalar(Rational(2), Rational(-1, 5)));

  // beyond int64: decimal strings both ways
  const Scalar big(Rational(mpq_class("123456789012345678901234567891/2")));
  const Json j = io::scalar_to_json(big);
  CHECK(j[0].is_string());
  CHECK(j[0] == "123456789012345678901234567891");
  CHECK(j[1] == 2);
  CHECK(io::scalar_from_json(j) == big);

  CHECK_THROWS_AS(io::scalar_from_json(Json::array({1, 0, 0, 1})), ParseError);
  CHECK_THROWS_AS(io::scalar_from_json(Json::array({1, 2, 3})), ParseError);
  CHECK_THROWS_AS(io::scalar_from_json(Json(0.5)), ParseError);
  CHECK(field_of([] { io::scalar_from_json(Json("x"), "/c"); }) == "/c");
}

TEST_CASE("element round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const AlgebraElement x = random_element(rng, n);
    const Json j = io::to_json(x);
    CHECK(io::document_kind(j) == "element");
    const AlgebraElement y = io::element_from_json(j);
    CHECK(y == x);
    CHECK(io::to_json(y) == j);
    // text round trip is byte-identical
    CHECK(io::dump(Json::parse(io::dump(j))) == io::dump(j));
  }
}

TEST_CASE("schema and unknown fields") {
  Json j = io::to_json(dij(2, 0, 1, LatticeVector{{1, 1}}));
  Json extra = j;
  extra["colour"] = "red";
  CHECK(field_of([&] { io::element_from_json(extra); }) == "/colour");

  Json nested = j;
  nested["d_terms"][0]["weight"] = 1;
  CHECK(field_of([&] { io::element_from_json(nested); }) == "/d_terms/0/weight");

  Json version = j;
  version["schema_version"] = 2;
  try {
    io::element_from_json(version);
    FAIL("accepted schema version 2");
  } catch (const ParseError& e) {
    CHECK(e.field() == "/schema_version");
    CHECK(std::string(e.what()).find("expected 1") != std::string::npos);
  }

  Json kind = j;
  kind["kind"] = "jet";
  CHECK(field_of([&] { io::element_from_json(kind); }) == "/kind");

  Json rank = j;
  rank["d_terms"][0]["degree"] = Json::array({1, 1, 1});
  CHECK(field_of([&] { io::element_from_json(rank); }) == "/d_terms/0/degree");

  Json missing = j;
  missing.erase("t_terms");
  CHECK(field_of([&] { io::element_from_json(missing); }) == "/t_terms");
}

TEST_CASE("irrep round trip") {
  for (const auto& marks : std::vector<std::vector<int>>{{0}, {2}, {1, 1}, {2, 0}}) {
    const SlWeight w{marks};
    const Irrep v = build_irrep(w, parse_scalar("1/2+i"));
    const Json j = io::to_json(v);
    const Irrep u = io::irrep_from_json(j);
    CHECK(io::same_irrep(u, v));
    CHECK(io::to_json(u) == j);
  }
  Json j = io::to_json(build_irrep(SlWeight{{1}}, Scalar(1)));
  j["E"][1]["matrix"][0][0] = Json::array({5, 1, 0, 1});
  CHECK(field_of([&] { io::irrep_from_json(j); }) == "/E");
  j = io::to_json(build_irrep(SlWeight{{1}}, Scalar(1)));
  j["dim"] = 3;
  CHECK_THROWS_AS(io::irrep_from_json(j), ParseError);
}

TEST_CASE("jet and triangular descriptors") {
  CoefficientVector alpha(3);
  alpha << parse_scalar("1/2"), parse_scalar("-1/3"), parse_scalar("1/5+i");
  io::JetDescriptor jd{JetParams{SlWeight{{1, 0}}, Scalar(1), alpha, parse_scalar("1+i")}, JetMode::Extended};
  const Json j = io::to_json(jd);
  const auto back = io::jet_from_json(j);
  CHECK(back.params.lambda == jd.params.lambda);
  CHECK(equal(back.params.alpha, alpha));
  CHECK(back.params.e == jd.params.e);
  CHECK(back.mode == JetMode::Extended);
  CHECK(io::to_json(back) == j);

  Json bad = j;
  bad["mode"] = "weird";
  CHECK(field_of([&] { io::jet_from_json(bad); }) == "/mode");
  bad = j;
  bad["lambda"] = Json::array({1});
  CHECK(field_of([&] { io::jet_from_json(bad); }) == "/lambda");

  const TriangularData t = triangular_from_orthogonal(LatticeVector{{2, 3}});
  const TriangularData u = io::triangular_from_json(io::to_json(t));
  CHECK(u.beta() == t.beta());
  CHECK(u.m_basis() == t.m_basis());
  Json tj = io::to_json(t);
  tj["beta"] = Json::array({2, 4});
  CHECK_THROWS_AS(io::triangular_from_json(tj), ParseError);
}

TEST_CASE("jet dump reloads to an equal weight table") {
  CoefficientVector alpha(2);
  alpha << parse_scalar("1/2"), parse_scalar("1/3");
  io::JetDescriptor jd{JetParams{SlWeight::fundamental(2, 1), Scalar(1), alpha, Scalar(1)}, JetMode::Extended};
  const Json j = io::jet_dump(jd, 2);
  const io::JetDump d = io::jet_dump_from_json(j);
  CHECK(d.window == 2);
  CHECK(d.weights.size() == 25);
  JetModule m(d.source.params, d.source.mode);
  for (const auto& [s, mult] : weight_support(m, 2).multiplicity) {
    REQUIRE(d.weights.count(s) == 1);
    CHECK(d.weights.at(s) == mult);
  }
  CHECK(io::jet_dump(d.source, d.window) == j);
}

TEST_CASE("verma dump reloads to equal weight tables") {
  CoefficientVector l0(2);
  l0 << parse_scalar("1/3"), Scalar(2);
  io::VermaDescriptor desc{InducingModule::character(l0, parse_scalar("-1/2")),
                           make_triangular({LatticeVector{{1, 0}}}, LatticeVector{{0, 1}}), 2, 2};
  const Json dj = io::to_json(desc);
  CHECK(io::to_json(io::verma_from_json(dj)) == dj);

  const TruncatedModule m = io::build(desc);
  std::vector<SingularReport> reports{find_singular_vectors(m, 1)};
  const Json dump = io::verma_dump(desc, m, reports);
  const io::VermaDump back = io::verma_dump_from_json(dump);
  CHECK_FALSE(back.quotient);
  CHECK(back.weights == m.weight_table());
  CHECK(io::build(back.source).weight_table() == back.weights);
  REQUIRE(back.singular.size() == 1);
  CHECK(back.singular[0].total_dim() == reports[0].total_dim());
  CHECK(io::verma_dump(back.source, m, back.singular) == dump);

  const TruncatedModule q = irreducible_quotient(m);
  const io::VermaDump qd = io::verma_dump_from_json(io::verma_dump(desc, q));
  CHECK(qd.quotient);
  CHECK(qd.weights == q.weight_table());
  CHECK(irreducible_quotient(io::build(qd.source)).weight_table() == qd.weights);

  Json bad = dump;
  bad["source"]["depth"] = -1;
  CHECK_THROWS_AS(io::verma_dump_from_json(bad), ParseError);
  bad = dump;
  bad["source"]["inducing"]["kind"] = "other";
  CHECK(field_of([&] { io::verma_dump_from_json(bad); }) == "/source/inducing/kind");
}

TEST_CASE("file helpers") {
  const std::string path = "divlie_io_test.json";
  const Json j = io::to_json(dij(2, 0, 1, LatticeVector{{2, -1}}));
  io::write_file(path, j);
  CHECK(io::read_file(path) == j);
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::read_file("no/such/file.json"), Error);
}
