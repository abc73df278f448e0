#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "divlie/irrep.hpp"
#include "divlie/jet.hpp"
#include "divlie/verma.hpp"

/// JSON persistence. Every top-level document carries "schema_version" and
/// "kind"; unknown fields are rejected and errors name the offending field as
/// a JSON pointer.
///
/// Scalars are [re_num, re_den, im_num, im_den]; each entry is a JSON integer
/// when it fits in int64 and a decimal string otherwise. On input a scalar may
/// also be a JSON integer or a string such as "1/3" or "2-1/5i".
namespace divlie::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

Json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j, const std::string& path = "");
Json lattice_to_json(const LatticeVector& m);
LatticeVector lattice_from_json(const Json& j, const std::string& path = "", int rank = -1);
Json coefficients_to_json(const CoefficientVector& u);
CoefficientVector coefficients_from_json(const Json& j, const std::string& path = "", int rank = -1);

/// The "kind" of a top-level document after checking its schema version.
std::string document_kind(const Json& j);

Json to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j);

/// n, lambda, c, dim, the gl weights of the basis and dense E_ij for all i, j.
Json to_json(const Irrep& irrep);
Irrep irrep_from_json(const Json& j);
bool same_irrep(const Irrep& a, const Irrep& b);

struct JetDescriptor {
  JetParams params;
  JetMode mode = JetMode::Extended;
};
Json to_json(const JetDescriptor& jet);
JetDescriptor jet_from_json(const Json& j);

Json to_json(const TriangularData& tri);
TriangularData triangular_from_json(const Json& j);

struct VermaDescriptor {
  InducingModule inducing;
  TriangularData triangular;
  int depth = 1;
  std::int64_t window = 1;
};
Json to_json(const VermaDescriptor& v);
VermaDescriptor verma_from_json(const Json& j);
TruncatedModule build(const VermaDescriptor& v);

using WeightTable = std::map<LatticeVector, Eigen::Index, LexLess>;
Json weight_table_to_json(const WeightTable& table, const TriangularData* tri = nullptr);

/// Dump of a jet module on [-window, window]^n.
struct JetDump {
  JetDescriptor source;
  std::int64_t window = 0;
  WeightTable weights;
};
Json jet_dump(const JetDescriptor& source, std::int64_t window);
JetDump jet_dump_from_json(const Json& j);

/// Dump of a truncated Verma module or its quotient.
struct VermaDump {
  VermaDescriptor source;
  bool quotient = false;
  WeightTable weights;
  std::vector<SingularReport> singular;
  bool window_unreliable = false;
};
Json verma_dump(const VermaDescriptor& source, const TruncatedModule& module,
                const std::vector<SingularReport>& singular = {});
VermaDump verma_dump_from_json(const Json& j);

Json singular_report_to_json(const SingularReport& r);
Json ledger_to_json(const LeakageLedger& ledger);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace divlie::io
