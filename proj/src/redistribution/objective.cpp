#include "qside/redistribution/objective.hpp"

#include "qside/core/entropy.hpp"
#include "qside/core/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qside::redist {

namespace {

// Smallest eigenvalue fed to log2; kernel directions never reach the gradient
// because the state has no weight there.
constexpr double kLogFloor = 1e-300;

// Entropy of the Hermitian PSD matrix h; if `log_h` is set, also log2(h).
double entropy_and_log(const Matrix& h, Matrix* log_h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, log_h ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  double s = 0.0;
  Eigen::VectorXd logs(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double l = std::max(ev(i), 0.0);
    if (l > 0.0) s -= l * std::log2(l);
    logs(i) = std::log2(std::max(l, kLogFloor));
  }
  if (log_h) *log_h = es.eigenvectors() * logs.asDiagonal() * es.eigenvectors().adjoint();
  return s;
}

}  // namespace

ConditionalInfoObjective::ConditionalInfoObjective(PurifiedSource source, int d_a_prime, int d_c)
    : source_(std::move(source)), d_a_prime_(d_a_prime), d_c_(d_c) {
  if (d_a_prime < 1 || d_c < 1) throw ShapeError("splitting dimensions must be >= 1");
  if (d_a_prime * d_c < source_.rank())
    throw ShapeError("dA'·dC = " + std::to_string(d_a_prime * d_c) + " is below rank " +
                     std::to_string(source_.rank()));
  const std::vector<int> dims{source_.d_a, source_.d_b, d_a_prime, d_c};
  cuts_ = {tensor::split_indices(dims, {true, false, false, true}),   // AC
           tensor::split_indices(dims, {false, true, false, true}),   // BC
           tensor::split_indices(dims, {false, false, true, false}),  // A' (= ABC)
           tensor::split_indices(dims, {false, false, false, true})}; // C
  weights_ = {0.5, 0.5, -0.5, -0.5};
}

double ConditionalInfoObjective::operator()(const Matrix& v, Matrix* grad) const {
  const Matrix& psi = source_.amplitudes;
  const Matrix phi_mat = psi * v.transpose();
  const Eigen::Index k = phi_mat.cols();
  Vector phi(phi_mat.size());
  for (Eigen::Index ab = 0; ab < phi_mat.rows(); ++ab)
    for (Eigen::Index j = 0; j < k; ++j) phi(ab * k + j) = phi_mat(ab, j);

  double value = 0.0;
  Vector h;
  if (grad) h = Vector::Zero(phi.size());
  Matrix log_h;
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    const auto& cut = cuts_[i];
    const Matrix m = tensor::as_bipartite(phi, cut);
    double s;
    if (cut.dim_in <= cut.dim_out) {
      s = entropy_and_log(m * m.adjoint(), grad ? &log_h : nullptr);
      if (grad) h -= weights_[i] * tensor::from_bipartite(log_h * m, cut);
    } else {
      // f(ρ_X) ⊗ 1 acts on a pure state like 1 ⊗ f(ρ_X̄); M† M is ρ_X̄ transposed
      s = entropy_and_log(m.adjoint() * m, grad ? &log_h : nullptr);
      if (grad) h -= weights_[i] * tensor::from_bipartite(m * log_h, cut);
    }
    value += weights_[i] * s;
  }
  if (grad) {
    Matrix y(phi_mat.rows(), k);
    for (Eigen::Index ab = 0; ab < y.rows(); ++ab)
      for (Eigen::Index j = 0; j < k; ++j) y(ab, j) = h(ab * k + j);
    *grad = 2.0 * (y.transpose() * psi.conjugate());
  }
  return value;
}

}  // namespace qside::redist
