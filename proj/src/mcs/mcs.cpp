#include "qside/mcs/mcs.hpp"

#include "qside/core/entropy.hpp"
#include "qside/core/errors.hpp"
#include "qside/measures/stiefel_search.hpp"
#include "qside/redistribution/objective.hpp"

#include <cmath>

namespace qside::mcs {

using measures::Decomposition;

MCSMatrix::MCSMatrix(Matrix sigma) : sigma_(std::move(sigma)) {
  if (sigma_.rows() < 1 || sigma_.rows() != sigma_.cols()) throw MCSError("sigma must be square and non-empty");
  if ((sigma_ - sigma_.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance)
    throw MCSError("sigma is not Hermitian");
  if (std::abs(sigma_.trace().real() - 1.0) > kStateTolerance) throw MCSError("sigma does not have unit trace");
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kStateTolerance) throw MCSError("sigma is not positive semidefinite");
}

DensityOperator mcs_state(const MCSMatrix& sigma) {
  const int k = sigma.k();
  Matrix m = Matrix::Zero(k * k, k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i * k + i, j * k + j) = sigma.sigma()(i, j);
  return DensityOperator::trusted(std::move(m), SystemLayout{{redist::kAPrime, k}, {redist::kC, k}});
}

MCSRealization mcs_from_decomposition(const Decomposition& dec) {
  const auto compact = dec.compacted();
  const auto& entries = compact.entries();
  const int k = static_cast<int>(entries.size());
  const int da = compact.layout()[0].dim;
  const int db = compact.layout()[1].dim;
  const int dab = da * db;
  const int kk = k * k;
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dab) * kk);
  Matrix sigma(k, k);
  for (int i = 0; i < k; ++i) {
    const double wi = std::sqrt(entries[i].p);
    const auto& psi_i = entries[i].psi.vector();
    for (int ab = 0; ab < dab; ++ab) v(static_cast<Eigen::Index>(ab) * kk + i * k + i) = wi * psi_i(ab);
    for (int j = 0; j < k; ++j)
      sigma(i, j) = wi * std::sqrt(entries[j].p) * entries[j].psi.vector().dot(psi_i);
  }
  v.normalize();
  SystemLayout layout{{redist::kA, da}, {redist::kB, db}, {redist::kAPrime, k}, {redist::kC, k}};
  return {MCSMatrix(std::move(sigma)), redist::FourPartyState(PureState(std::move(v), std::move(layout)))};
}

IdentitySides mcs_cmi_identity(const Decomposition& dec) {
  const auto real = mcs_from_decomposition(dec);
  IdentitySides out;
  out.lhs = redist::cost_pair(real.state).q;
  out.rhs = dec.compacted().average_entanglement();
  return out;
}

redist::CostPair mcs_cost_pair(const Decomposition& dec) {
  return redist::cost_pair(mcs_from_decomposition(dec).state);
}

redist::SplittingIsometry mcs_splitting(const DensityOperator& rho_ab, const Decomposition& dec) {
  const auto canonical = rho_ab.relabeled({redist::kA, redist::kB});
  return redist::splitting_from_purification(canonical, mcs_from_decomposition(dec).state);
}

Matrix copy_isometry(const Matrix& u) {
  const auto k = u.rows();
  Matrix v = Matrix::Zero(k * k, u.cols());
  for (Eigen::Index i = 0; i < k; ++i) v.row(i * k + i) = u.row(i);
  return v;
}

measures::MeasureReport eof_via_mcs(const DensityOperator& rho_ab, std::optional<int> k,
                                    const measures::OptimizerConfig& cfg) {
  auto src = redist::purified_source(rho_ab);
  const int r = src.rank();
  const int kk = k.value_or(r * r);
  if (kk < r) throw ShapeError("k = " + std::to_string(kk) + " is below rank " + std::to_string(r));

  const redist::ConditionalInfoObjective cmi(src, kk, kk);
  const measures::MatrixObjective f = [&](const Matrix& u, Matrix* grad) {
    Matrix grad_v;
    const double value = cmi(copy_isometry(u), grad ? &grad_v : nullptr);
    if (grad) {
      grad->resize(u.rows(), u.cols());
      for (Eigen::Index i = 0; i < u.rows(); ++i) grad->row(i) = grad_v.row(i * u.rows() + i);
    }
    return value;
  };

  auto run_cfg = cfg;
  run_cfg.mode = measures::Mode::minimize;
  // the spectral decomposition is always among the starts
  const std::vector<Matrix> seeds{Matrix::Identity(kk, r)};
  const auto result = measures::stiefel_search(f, kk, r, seeds, run_cfg);

  redist::SplittingIsometry cert(copy_isometry(result.best.point), kk, kk);
  const auto canonical = rho_ab.relabeled({redist::kA, redist::kB});
  const auto state = redist::split_purification(canonical, cert);

  measures::MeasureReport rep;
  rep.measure = "eof_via_mcs";
  rep.value = result.best.value;
  rep.bound = measures::Bound::upper;
  rep.entanglement_at_optimum = redist::entanglement_balance(state);
  rep.certificate = std::move(cert);
  rep.converged = result.best.converged;
  rep.restarts_within_tolerance = result.within_tolerance;
  rep.degenerate = result.degenerate;
  rep.runs = static_cast<int>(result.run_values.size());
  rep.iterations = result.total_iterations;
  rep.tolerance = cfg.tolerance;
  return rep;
}

}  // namespace qside::mcs
