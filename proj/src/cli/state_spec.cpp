#include "qside/cli/state_spec.hpp"

#include "qside/cli/errors.hpp"
#include "qside/core/errors.hpp"
#include "qside/core/families.hpp"

#include <json.hpp>

#include <complex>

namespace qside::cli {

namespace {

using nlohmann::json;

std::complex<double> entry(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (!e.is_object() || !e.contains("re") || !e["re"].is_number())
    throw ParseError("matrix entries must be numbers or {\"re\", \"im\"} objects");
  double im = 0.0;
  if (e.contains("im")) {
    if (!e["im"].is_number()) throw ParseError("'im' must be a number");
    im = e["im"].get<double>();
  }
  return {e["re"].get<double>(), im};
}

DensityOperator from_matrix(const json& doc) {
  const auto& dims_j = doc["dims"];
  if (!dims_j.is_array() || dims_j.empty()) throw ParseError("'dims' must be a non-empty array");
  std::vector<int> dims;
  for (const auto& d : dims_j) {
    if (!d.is_number_integer() || d.get<long long>() < 1) throw ParseError("'dims' entries must be positive integers");
    dims.push_back(d.get<int>());
  }
  std::vector<std::string> labels = default_labels(dims.size());
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != dims.size()) throw ParseError("'labels' must match 'dims'");
    labels.clear();
    for (const auto& x : l) {
      if (!x.is_string()) throw ParseError("labels must be strings");
      labels.push_back(x.get<std::string>());
    }
  }
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) throw ParseError("missing 'matrix' array");
  const auto& rows = doc["matrix"];
  const auto n = rows.size();
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("matrix must be square");
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry(rows[i][j]);
  }
  std::vector<Subsystem> subs;
  for (std::size_t i = 0; i < dims.size(); ++i) subs.push_back({labels[i], dims[i]});
  SystemLayout layout;
  try {
    layout = SystemLayout(std::move(subs));
  } catch (const LayoutError& e) {
    throw ParseError(e.what());
  }
  return DensityOperator(std::move(m), std::move(layout));
}

DensityOperator from_family(const json& doc) {
  if (!doc["family"].is_string()) throw ParseError("'family' must be a string");
  ParamMap params;
  if (doc.contains("params")) {
    const auto& p = doc["params"];
    if (!p.is_object()) throw ParseError("'params' must be an object");
    for (const auto& [key, value] : p.items()) {
      if (!value.is_number()) throw ParseError("parameter '" + key + "' must be a number");
      params[key] = value.get<double>();
    }
  }
  return state_family(doc["family"].get<std::string>(), params);
}

}  // namespace

DensityOperator parse_state_spec(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("state spec must be an object");
  if (doc.contains("family")) return from_family(doc);
  if (doc.contains("dims")) return from_matrix(doc);
  throw ParseError("state spec needs either 'family' or 'dims' + 'matrix'");
}

}  // namespace qside::cli
