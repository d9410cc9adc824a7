#pragma once

// nlohmann/json single header from vendor/
#include <json.hpp>

#include "rebax/chain.hpp"

namespace rebax {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "rebax";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

Json scalar_to_json(const Scalar& s);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json representation_to_json(const Representation& rep, bool with_matrices = true);
Json boundary_to_json(const BoundarySolution& b, bool with_matrix = true);

// One verification record. `identity` names the checked identity;
// fail records carry the witness (entry position and both values).
struct CheckRecord {
  std::string name;
  std::string identity;
  Json params;
  std::string status;  // pass | fail | skipped | error
  std::string witness;
  double elapsed_ms = 0.0;
};

struct Report {
  Json config;
  std::vector<CheckRecord> checks;

  void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
  void add_result(const std::string& name, const std::string& identity,
                  Json params, const CheckResult& result, double elapsed_ms = 0.0);
  void add_skipped(const std::string& name, const std::string& identity,
                   Json params, const std::string& reason);

  std::size_t count(const std::string& status) const;
  // 0 all pass, 1 any fail/error.
  int exit_code() const;
  // Records sorted by (name, params); determinism relies on this.
  void sort_records();
  Json to_json() const;
};

}  // namespace rebax
