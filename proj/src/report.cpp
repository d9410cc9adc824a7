#include "rebax/report.hpp"

#include <algorithm>

namespace rebax {

Json scalar_to_json(const Scalar& s) { return s.str(); }

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["dim"] = m.dim();
  j["factors"] = m.factors();
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      entries.push_back(m.at(r, c).str());
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::size_t> factors =
      j.at("factors").get<std::vector<std::size_t>>();
  Matrix m(dim, factors);
  const auto& entries = j.at("entries");
  if (entries.size() != dim * dim) throw Error("matrix JSON: entry count");
  std::size_t k = 0;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      m.at(r, c) = Scalar::parse(entries[k++].get<std::string>());
  return m;
}

Json representation_to_json(const Representation& rep, bool with_matrices) {
  Json j;
  j["name"] = rep.name;
  j["kind"] = rep.is_bmw() ? "bmw" : "hecke";
  j["N"] = rep.N;
  j["q"] = rep.q.str();
  j["lambda"] = rep.lambda.str();
  j["a"] = rep.a.str();
  if (rep.is_bmw()) j["nu"] = rep.nu.str();
  j["trD"] = rep.trD.str();
  j["Dplus"] = rep.Dplus.str();
  j["Dminus"] = rep.Dminus.str();
  j["b"] = rep.b.str();
  if (with_matrices) {
    j["R"] = matrix_to_json(rep.R);
    j["F"] = matrix_to_json(rep.F);
    j["D"] = matrix_to_json(rep.Dop);
    if (rep.is_bmw()) j["Khat"] = matrix_to_json(rep.Khat);
  }
  return j;
}

Json boundary_to_json(const BoundarySolution& b, bool with_matrix) {
  Json j;
  j["kind"] = b.kind;
  j["xi"] = b.xi.str();
  if (!b.alpha.empty()) {
    Json a = Json::array();
    for (const auto& x : b.alpha) a.push_back(x.str());
    j["alpha"] = std::move(a);
  }
  if (!b.Q.empty()) {
    Json qq = Json::array();
    for (const auto& x : b.Q) qq.push_back(x.str());
    j["c"] = b.c.str();
    j["Q"] = std::move(qq);
  }
  if (b.kind == "small") j["zeta"] = b.zeta.str();
  if (with_matrix && b.L.dim() > 0) j["L"] = matrix_to_json(b.L);
  return j;
}

void Report::add_result(const std::string& name, const std::string& identity,
                        Json params, const CheckResult& result,
                        double elapsed_ms) {
  CheckRecord rec;
  rec.name = name;
  rec.identity = identity;
  rec.params = std::move(params);
  rec.status = result.ok ? "pass" : "fail";
  rec.witness = result.ok ? "" : result.note;
  rec.elapsed_ms = elapsed_ms;
  checks.push_back(std::move(rec));
}

void Report::add_skipped(const std::string& name, const std::string& identity,
                         Json params, const std::string& reason) {
  CheckRecord rec;
  rec.name = name;
  rec.identity = identity;
  rec.params = std::move(params);
  rec.status = "skipped";
  rec.witness = reason;
  checks.push_back(std::move(rec));
}

std::size_t Report::count(const std::string& status) const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.status == status) ++n;
  return n;
}

int Report::exit_code() const {
  return (count("fail") + count("error")) > 0 ? 1 : 0;
}

void Report::sort_records() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     if (a.name != b.name) return a.name < b.name;
                     return a.params.dump() < b.params.dump();
                   });
}

Json Report::to_json() const {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["schema_version"] = kReportSchemaVersion;
  j["config"] = config;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json r;
    r["name"] = c.name;
    r["identity"] = c.identity;
    r["params"] = c.params;
    r["status"] = c.status;
    if (!c.witness.empty()) r["witness"] = c.witness;
    r["elapsed_ms"] = c.elapsed_ms;
    arr.push_back(std::move(r));
  }
  j["checks"] = std::move(arr);
  Json summary;
  summary["pass"] = count("pass");
  summary["fail"] = count("fail");
  summary["skipped"] = count("skipped");
  summary["error"] = count("error");
  j["summary"] = std::move(summary);
  return j;
}

}  // namespace rebax
