#include "qside/core/families.hpp"

#include "qside/core/errors.hpp"
#include "qside/core/random.hpp"

#include <cmath>
#include <limits>

namespace qside {

SystemLayout bipartite_layout(int da, int db) { return SystemLayout{{"A", da}, {"B", db}}; }

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < 26)
      out.emplace_back(1, static_cast<char>('A' + i));
    else
      out.push_back("S" + std::to_string(i));
  }
  return out;
}

DensityOperator bell_state() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityOperator(m, bipartite_layout(2, 2));
}

DensityOperator classically_correlated() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = 0.5;
  return DensityOperator(m, bipartite_layout(2, 2));
}

DensityOperator werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParamError("werner: p must lie in [0, 1]");
  Matrix singlet = Matrix::Zero(4, 4);
  singlet(1, 1) = singlet(2, 2) = 0.5;
  singlet(1, 2) = singlet(2, 1) = -0.5;
  Matrix m = p * singlet + (1.0 - p) * Matrix::Identity(4, 4) / 4.0;
  return DensityOperator(m, bipartite_layout(2, 2));
}

DensityOperator isotropic(int d, double p) {
  if (d < 2) throw ParamError("isotropic: d must be >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw ParamError("isotropic: p must lie in [0, 1]");
  const int n = d * d;
  Matrix phi = Matrix::Zero(n, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) phi(i * d + i, j * d + j) = 1.0 / d;
  Matrix m = p * phi + (1.0 - p) * Matrix::Identity(n, n) / static_cast<double>(n);
  return DensityOperator(m, bipartite_layout(d, d));
}

DensityOperator random_density(const std::vector<int>& dims, int rank, std::uint64_t seed) {
  if (dims.empty()) throw ParamError("random: need at least one subsystem");
  std::vector<Subsystem> subs;
  const auto labels = default_labels(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1) throw ParamError("random: dimensions must be >= 1");
    subs.push_back({labels[i], dims[i]});
  }
  SystemLayout layout(std::move(subs));
  const int d = layout.total_dim();
  if (rank < 1 || rank > d) throw ParamError("random: rank must lie in [1, dim]");
  Rng rng(seed);
  const Matrix g = ginibre(d, rank, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityOperator(std::move(m), std::move(layout));
}

PureState random_pure(const std::vector<int>& dims, std::uint64_t seed) {
  std::vector<Subsystem> subs;
  const auto labels = default_labels(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) subs.push_back({labels[i], dims[i]});
  SystemLayout layout(std::move(subs));
  Vector v = haar_isometry(layout.total_dim(), 1, seed).col(0);
  return PureState(std::move(v), std::move(layout));
}

namespace {

double param(const ParamMap& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ParamError("missing parameter '" + key + "'");
  return it->second;
}

double param_or(const ParamMap& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

int integer_param(double v, const std::string& key) {
  if (!(std::abs(v - std::round(v)) < 1e-9) || v < 0 || v > std::numeric_limits<int>::max())
    throw ParamError("parameter '" + key + "' must be a non-negative integer");
  return static_cast<int>(std::llround(v));
}

}  // namespace

DensityOperator state_family(std::string_view name, const ParamMap& params) {
  if (name == "bell") return bell_state();
  if (name == "classically_correlated") return classically_correlated();
  if (name == "werner") return werner(param(params, "p"));
  if (name == "isotropic")
    return isotropic(integer_param(param_or(params, "d", 2), "d"), param(params, "p"));
  if (name == "random") {
    const int da = integer_param(param(params, "da"), "da");
    const int db = integer_param(param_or(params, "db", 1), "db");
    const int rank = integer_param(param_or(params, "rank", da * db), "rank");
    const auto seed = static_cast<std::uint64_t>(integer_param(param_or(params, "seed", 0), "seed"));
    std::vector<int> dims{da};
    if (db != 1) dims.push_back(db);
    return random_density(dims, rank, seed);
  }
  throw ParamError("unknown state family '" + std::string(name) + "'");
}

}  // namespace qside
