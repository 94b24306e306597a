#include "qside/measures/measures.hpp"

#include "qside/core/entropy.hpp"
#include "qside/core/errors.hpp"
#include "qside/mcs/mcs.hpp"
#include "qside/measures/stiefel_search.hpp"
#include "qside/redistribution/cost_pair.hpp"
#include "qside/redistribution/objective.hpp"

#include <cmath>

namespace qside::measures {

namespace {

DensityOperator canonical(const DensityOperator& rho_ab) {
  if (rho_ab.layout().size() != 2)
    throw ShapeError("expected a bipartite state, got layout " + to_string(rho_ab.layout()));
  return rho_ab.relabeled({redist::kA, redist::kB});
}

struct Candidate {
  double value;
  redist::SplittingIsometry v;
};

double evaluate_splitting(const redist::PurifiedSource& src, const redist::SplittingIsometry& v) {
  if (v.d_e() != src.rank()) throw ShapeError("seed splitting does not act on the rank-sized environment");
  return redist::ConditionalInfoObjective(src, v.d_a_prime(), v.d_c())(v.matrix(), nullptr);
}

MeasureReport decomposition_search(const DensityOperator& rho_ab, std::optional<int> k,
                                   const OptimizerConfig& cfg, Mode mode, const char* name) {
  const auto rho = canonical(rho_ab);
  auto src = redist::purified_source(rho);
  const int r = src.rank();
  const int kk = k.value_or(r * r);
  if (kk < r) throw ShapeError("k = " + std::to_string(kk) + " is below rank " + std::to_string(r));

  const AverageEntanglementObjective objective(std::move(src));
  const MatrixObjective f = [&](const Matrix& u, Matrix* grad) { return objective(u, grad); };
  auto run_cfg = cfg;
  run_cfg.mode = mode;
  const std::vector<Matrix> seeds{Matrix::Identity(kk, r)};
  const auto result = stiefel_search(f, kk, r, seeds, run_cfg);

  auto dec = decomposition_from_isometry(rho_ab, result.best.point);
  MeasureReport rep;
  rep.measure = name;
  rep.value = result.best.value;
  rep.bound = mode == Mode::minimize ? Bound::upper : Bound::lower;
  rep.entanglement_at_optimum = mcs::mcs_cost_pair(dec).e;
  rep.certificate = std::move(dec);
  rep.converged = result.best.converged;
  rep.restarts_within_tolerance = result.within_tolerance;
  rep.degenerate = result.degenerate;
  rep.runs = static_cast<int>(result.run_values.size());
  rep.iterations = result.total_iterations;
  rep.tolerance = cfg.tolerance;
  return rep;
}

}  // namespace

MeasureReport optimize_splitting(const DensityOperator& rho_ab, int d_a_prime, int d_c,
                                 const OptimizerConfig& cfg,
                                 std::span<const redist::SplittingIsometry> seeds) {
  const auto rho = canonical(rho_ab);
  const auto src = redist::purified_source(rho);
  const int r = src.rank();
  if (d_a_prime < 1 || d_c < 1 || d_a_prime * d_c < r)
    throw ShapeError("need dA'·dC >= rank(rho_AB) = " + std::to_string(r));
  const bool minimize = cfg.mode == Mode::minimize;

  std::vector<redist::SplittingIsometry> all_seeds{redist::all_at_receiver(r)};
  all_seeds.insert(all_seeds.end(), seeds.begin(), seeds.end());

  std::vector<Matrix> starts;
  for (const auto& s : all_seeds) {
    Matrix embedded;
    if (redist::embed_splitting(s, d_a_prime, d_c, embedded)) starts.push_back(std::move(embedded));
  }

  const redist::ConditionalInfoObjective objective(src, d_a_prime, d_c);
  const MatrixObjective f = [&](const Matrix& v, Matrix* grad) { return objective(v, grad); };
  const auto result = stiefel_search(f, d_a_prime * d_c, r, starts, cfg);

  std::vector<Candidate> candidates;
  candidates.push_back({result.best.value, redist::SplittingIsometry(result.best.point, d_a_prime, d_c)});
  for (const auto& s : all_seeds) candidates.push_back({evaluate_splitting(src, s), s});
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const bool better = minimize ? candidates[i].value < candidates[best].value
                                 : candidates[i].value > candidates[best].value;
    if (better) best = i;
  }

  MeasureReport rep;
  rep.measure = minimize ? "splitting_min" : "splitting_max";
  rep.value = candidates[best].value;
  rep.bound = minimize ? Bound::upper : Bound::lower;
  rep.entanglement_at_optimum =
      redist::entanglement_balance(redist::split_purification(rho, candidates[best].v));
  rep.certificate = candidates[best].v;
  rep.converged = result.best.converged;
  rep.restarts_within_tolerance = result.within_tolerance;
  rep.degenerate = result.degenerate;
  rep.runs = static_cast<int>(result.run_values.size());
  rep.iterations = result.total_iterations;
  rep.tolerance = cfg.tolerance;
  return rep;
}

MeasureReport squashed_upper(const DensityOperator& rho_ab, int d_a_prime, int d_c,
                             const OptimizerConfig& cfg,
                             std::span<const redist::SplittingIsometry> seeds) {
  const auto rho = canonical(rho_ab);
  if (d_a_prime < 1 || d_c < 1 || d_a_prime * d_c < rho.rank())
    throw ShapeError("need dA'·dC >= rank(rho_AB) = " + std::to_string(rho.rank()));
  const auto formation = eof(rho, std::nullopt, cfg);
  std::vector<redist::SplittingIsometry> all(seeds.begin(), seeds.end());
  all.push_back(mcs::mcs_splitting(rho, std::get<Decomposition>(formation.certificate)));

  auto run_cfg = cfg;
  run_cfg.mode = Mode::minimize;
  auto rep = optimize_splitting(rho, d_a_prime, d_c, run_cfg, all);
  rep.measure = "squashed_upper";
  return rep;
}

MeasureReport puffed_lower(const DensityOperator& rho_ab, int d_a_prime, int d_c,
                           const OptimizerConfig& cfg,
                           std::span<const redist::SplittingIsometry> seeds) {
  const auto rho = canonical(rho_ab);
  if (d_a_prime < 1 || d_c < 1 || d_a_prime * d_c < rho.rank())
    throw ShapeError("need dA'·dC >= rank(rho_AB) = " + std::to_string(rho.rank()));
  const auto assisted = eoa_single(rho, std::nullopt, cfg);
  std::vector<redist::SplittingIsometry> all(seeds.begin(), seeds.end());
  all.push_back(mcs::mcs_splitting(rho, std::get<Decomposition>(assisted.certificate)));

  auto run_cfg = cfg;
  run_cfg.mode = Mode::maximize;
  auto rep = optimize_splitting(rho, d_a_prime, d_c, run_cfg, all);
  rep.measure = "puffed_lower";
  rep.closed_form = eoa_asymptotic(rho);
  return rep;
}

DensityOperator flag_extension(const DensityOperator& rho_ab, std::span<const ProductTerm> parts) {
  const auto rho = canonical(rho_ab);
  const int da = rho.layout()[0].dim;
  const int db = rho.layout()[1].dim;
  if (parts.empty()) throw DecompositionError("no product terms given");
  const int n = static_cast<int>(parts.size());
  Matrix sum = Matrix::Zero(da * db, da * db);
  Matrix ext = Matrix::Zero(da * db * n, da * db * n);
  for (int i = 0; i < n; ++i) {
    const auto& t = parts[i];
    if (!(t.p >= 0.0)) throw DecompositionError("negative weight in product term");
    if (t.rho_a.dim() != da || t.rho_b.dim() != db)
      throw DecompositionError("product term dimensions do not match rho_AB");
    const auto term = tensor_product(t.rho_a.relabeled({"a"}), t.rho_b.relabeled({"b"})).matrix();
    sum += t.p * term;
    for (int x = 0; x < da * db; ++x)
      for (int y = 0; y < da * db; ++y) ext(x * n + i, y * n + i) = t.p * term(x, y);
  }
  if (max_abs_diff(sum, rho.matrix()) > 1e-9)
    throw DecompositionError("product terms do not reconstruct rho_AB");
  return DensityOperator::trusted(std::move(ext),
                                  SystemLayout{{redist::kA, da}, {redist::kB, db}, {"E~", n}});
}

redist::SplittingIsometry flag_splitting(const DensityOperator& rho_ab, std::span<const ProductTerm> parts) {
  const auto rho = canonical(rho_ab);
  flag_extension(rho, parts);  // validates the terms
  const int da = rho.layout()[0].dim;
  const int db = rho.layout()[1].dim;
  const int n = static_cast<int>(parts.size());
  // columns of `half` are √α_j |u_j⟩, so Σ_j half(:, j) ⊗ |j⟩ purifies the factor
  const auto half = [](const DensityOperator& r) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(r.matrix());
    Eigen::VectorXd w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return Matrix(es.eigenvectors() * w.asDiagonal());
  };
  const int d_ap = da * db * n;
  Vector v = Vector::Zero(static_cast<Eigen::Index>(da) * db * d_ap * n);
  for (int i = 0; i < n; ++i) {
    const Matrix ha = half(parts[i].rho_a);
    const Matrix hb = half(parts[i].rho_b);
    const double w = std::sqrt(parts[i].p);
    for (int a = 0; a < da; ++a)
      for (int b = 0; b < db; ++b)
        for (int a1 = 0; a1 < da; ++a1)
          for (int b1 = 0; b1 < db; ++b1) {
            const Eigen::Index ap = (static_cast<Eigen::Index>(a1) * db + b1) * n + i;
            const Eigen::Index idx = ((static_cast<Eigen::Index>(a) * db + b) * d_ap + ap) * n + i;
            v(idx) = w * ha(a, a1) * hb(b, b1);
          }
  }
  v.normalize();
  SystemLayout layout{{redist::kA, da}, {redist::kB, db}, {redist::kAPrime, d_ap}, {redist::kC, n}};
  return redist::splitting_from_purification(
      rho, redist::FourPartyState(PureState(std::move(v), std::move(layout))));
}

MeasureReport eof(const DensityOperator& rho_ab, std::optional<int> k, const OptimizerConfig& cfg) {
  return decomposition_search(rho_ab, k, cfg, Mode::minimize, "eof");
}

MeasureReport eoa_single(const DensityOperator& rho_ab, std::optional<int> k, const OptimizerConfig& cfg) {
  auto rep = decomposition_search(rho_ab, k, cfg, Mode::maximize, "eoa_single");
  rep.closed_form = eoa_asymptotic(rho_ab);
  return rep;
}

double eoa_asymptotic(const DensityOperator& rho_ab) {
  const auto rho = canonical(rho_ab);
  return std::min(marginal_entropy(rho, {redist::kA}), marginal_entropy(rho, {redist::kB}));
}

double puffed_superadditivity_gap(const DensityOperator& rho1, const DensityOperator& rho2) {
  const auto r1 = canonical(rho1).relabeled({"A1", "B1"});
  const auto r2 = canonical(rho2).relabeled({"A2", "B2"});
  const auto joint = tensor_product(r1, r2);
  const double joint_min =
      std::min(marginal_entropy(joint, {"A1", "A2"}), marginal_entropy(joint, {"B1", "B2"}));
  return joint_min - eoa_asymptotic(rho1) - eoa_asymptotic(rho2);
}

bool puffed_superadditivity_witness(const DensityOperator& rho1, const DensityOperator& rho2) {
  return puffed_superadditivity_gap(rho1, rho2) > 1e-9;
}

}  // namespace qside::measures
