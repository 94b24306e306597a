#include "qside/redistribution/cost_pair.hpp"

#include "qside/core/entropy.hpp"
#include "qside/core/errors.hpp"
#include "qside/core/tensor.hpp"

#include <Eigen/SVD>

namespace qside::redist {

namespace {

void require_canonical(const SystemLayout& layout) {
  if (layout.size() != 4 || layout[0].label != kA || layout[1].label != kB ||
      layout[2].label != kAPrime || layout[3].label != kC)
    throw LayoutError("four-party state must be laid out as A, B, A', C; got " + to_string(layout));
}

}  // namespace

FourPartyState::FourPartyState(PureState pure) : pure_(std::move(pure)) {
  require_canonical(pure_.layout());
}

DensityOperator FourPartyState::marginal_ab() const { return partial_trace(pure_, {kA, kB}); }

DensityOperator FourPartyState::marginal_side_information() const {
  return partial_trace(pure_, {kAPrime, kC});
}

FourPartyState split_purification(const DensityOperator& rho_ab, const SplittingIsometry& v) {
  const auto src = purified_source(rho_ab);
  if (v.d_e() != src.rank())
    throw ShapeError("splitting acts on dE = " + std::to_string(v.d_e()) +
                     " but rank(rho_AB) = " + std::to_string(src.rank()));
  const Matrix phi = src.amplitudes * v.matrix().transpose();  // (ab) × (a'c)
  Vector vec(phi.size());
  const auto k = phi.cols();
  for (Eigen::Index ab = 0; ab < phi.rows(); ++ab)
    for (Eigen::Index j = 0; j < k; ++j) vec(ab * k + j) = phi(ab, j);
  SystemLayout layout{{kA, src.d_a}, {kB, src.d_b}, {kAPrime, v.d_a_prime()}, {kC, v.d_c()}};
  return FourPartyState(PureState(std::move(vec), std::move(layout)));
}

CostPair cost_pair(const FourPartyState& state) {
  const auto& psi = state.pure();
  const double q = 0.5 * conditional_mutual_information(psi, {kA}, {kB}, {kC});
  const double s_a = marginal_entropy(psi, {kA});
  const double i_a_ap = s_a + marginal_entropy(psi, {kAPrime}) - marginal_entropy(psi, {kA, kAPrime});
  const double i_a_c = s_a + marginal_entropy(psi, {kC}) - marginal_entropy(psi, {kA, kC});
  return {q, 0.5 * i_a_ap - 0.5 * i_a_c};
}

double entanglement_balance(const FourPartyState& state) {
  const auto& psi = state.pure();
  const double s_a_given_c = marginal_entropy(psi, {kA, kC}) - marginal_entropy(psi, {kC});
  return s_a_given_c - 0.5 * conditional_mutual_information(psi, {kA}, {kB}, {kC});
}

FourPartyState swap_sides(const FourPartyState& state) {
  auto swapped = reorder(state.pure(), {kA, kB, kC, kAPrime});
  return FourPartyState(swapped.relabeled({kA, kB, kAPrime, kC}));
}

SplittingIsometry splitting_from_purification(const DensityOperator& rho_ab,
                                              const FourPartyState& state) {
  const auto src = purified_source(rho_ab);
  if (state.d_a() != src.d_a || state.d_b() != src.d_b)
    throw ShapeError("purification dimensions do not match rho_AB");
  if (max_abs_diff(state.marginal_ab().matrix(), rho_ab.matrix()) > 1e-9)
    throw ShapeError("state is not a purification of rho_AB");
  const auto split = tensor::split_indices(state.pure().layout().dims(), {true, true, false, false});
  const Matrix m = tensor::as_bipartite(state.pure().vector(), split);
  // Ψ has orthogonal columns with squared norms λ_e, so V^T = diag(1/λ) Ψ† M.
  const Eigen::VectorXd lambda = src.amplitudes.colwise().squaredNorm().transpose();
  Matrix vt = src.amplitudes.adjoint() * m;
  for (Eigen::Index e = 0; e < vt.rows(); ++e) vt.row(e) /= lambda(e);
  Matrix v = vt.transpose();
  // polar projection removes roundoff from the division
  Eigen::JacobiSVD<Matrix> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
  v = svd.matrixU() * svd.matrixV().adjoint();
  return SplittingIsometry(std::move(v), state.d_a_prime(), state.d_c());
}

}  // namespace qside::redist
