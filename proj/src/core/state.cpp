#include "qside/core/state.hpp"

#include "qside/core/errors.hpp"
#include "qside/core/tensor.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>

namespace qside {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

DensityOperator::DensityOperator(Matrix matrix, SystemLayout layout)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
  if (matrix_.rows() != matrix_.cols())
    throw ValidationError("shape", "matrix is not square");
  if (matrix_.rows() != layout_.total_dim())
    throw ValidationError("shape", "matrix dimension " + std::to_string(matrix_.rows()) +
                                       " does not match layout " + to_string(layout_));
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kStateTolerance)
    throw ValidationError("hermitian", "deviation from Hermitian " + fmt(herm));
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kStateTolerance)
    throw ValidationError("trace", "trace is " + fmt(tr));
  // symmetrize away sub-tolerance noise so downstream solvers see a Hermitian input
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
  const double lo = eigenvalues().minCoeff();
  if (lo < -kStateTolerance)
    throw ValidationError("positivity", "smallest eigenvalue " + fmt(lo));
}

DensityOperator::DensityOperator(Matrix matrix, SystemLayout layout, Unchecked)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {}

DensityOperator DensityOperator::trusted(Matrix matrix, SystemLayout layout) {
  return DensityOperator(std::move(matrix), std::move(layout), Unchecked{});
}

Eigen::VectorXd DensityOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

int DensityOperator::rank() const {
  const auto ev = eigenvalues();
  return static_cast<int>((ev.array() > kRankThreshold).count());
}

DensityOperator DensityOperator::relabeled(const std::vector<std::string>& labels) const {
  return trusted(matrix_, layout_.relabeled(labels));
}

PureState::PureState(Vector vector, SystemLayout layout)
    : vector_(std::move(vector)), layout_(std::move(layout)) {
  if (vector_.size() != layout_.total_dim())
    throw ValidationError("shape", "vector length " + std::to_string(vector_.size()) +
                                       " does not match layout " + to_string(layout_));
  const double n = vector_.norm();
  if (std::abs(n - 1.0) > kStateTolerance) throw ValidationError("norm", "norm is " + fmt(n));
}

DensityOperator PureState::density() const {
  return DensityOperator::trusted(vector_ * vector_.adjoint(), layout_);
}

PureState PureState::relabeled(const std::vector<std::string>& labels) const {
  return PureState(vector_, layout_.relabeled(labels));
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  auto layout = a.layout().concat(b.layout());
  Matrix m = Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval();
  return DensityOperator::trusted(std::move(m), std::move(layout));
}

PureState tensor_product(const PureState& a, const PureState& b) {
  auto layout = a.layout().concat(b.layout());
  Vector v = Eigen::kroneckerProduct(a.vector(), b.vector()).eval();
  return PureState(std::move(v), std::move(layout));
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep) {
  if (keep.empty()) throw LayoutError("partial_trace: keep set is empty");
  const auto mask = rho.layout().mask(keep);
  Matrix m = tensor::partial_trace(rho.matrix(), rho.layout().dims(), mask);
  return DensityOperator::trusted(std::move(m), rho.layout().select(mask));
}

DensityOperator partial_trace(const PureState& psi, const std::vector<std::string>& keep) {
  if (keep.empty()) throw LayoutError("partial_trace: keep set is empty");
  const auto mask = psi.layout().mask(keep);
  const auto split = tensor::split_indices(psi.layout().dims(), mask);
  const Matrix m = tensor::as_bipartite(psi.vector(), split);
  return DensityOperator::trusted(m * m.adjoint(), psi.layout().select(mask));
}

PureState purify(const DensityOperator& rho, const std::string& env_label) {
  if (rho.layout().contains(env_label))
    throw LayoutError("purify: environment label '" + env_label + "' already in layout");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  const auto& ev = es.eigenvalues();
  std::vector<int> kept;
  // descending order so the environment basis is sorted by weight
  for (int k = static_cast<int>(ev.size()) - 1; k >= 0; --k)
    if (ev(k) > kRankThreshold) kept.push_back(k);
  const int r = static_cast<int>(kept.size());
  double mass = 0.0;
  for (int k : kept) mass += ev(k);
  const int d = rho.dim();
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d) * r);
  for (int e = 0; e < r; ++e) {
    const double w = std::sqrt(ev(kept[e]) / mass);
    const auto col = es.eigenvectors().col(kept[e]);
    for (int i = 0; i < d; ++i) v(static_cast<Eigen::Index>(i) * r + e) = w * col(i);
  }
  auto layout = rho.layout().concat(SystemLayout{{env_label, r}});
  return PureState(std::move(v), std::move(layout));
}

namespace {

std::vector<int> order_to_perm(const SystemLayout& layout, const std::vector<std::string>& order) {
  if (order.size() != layout.size()) throw LayoutError("reorder: order must list every label");
  std::vector<int> perm;
  for (const auto& l : order) perm.push_back(static_cast<int>(layout.index_of(l)));
  return perm;
}

SystemLayout permuted_layout(const SystemLayout& layout, const std::vector<int>& perm) {
  std::vector<Subsystem> subs;
  for (int p : perm) subs.push_back(layout[p]);
  return SystemLayout(std::move(subs));
}

}  // namespace

DensityOperator reorder(const DensityOperator& rho, const std::vector<std::string>& order) {
  const auto perm = order_to_perm(rho.layout(), order);
  Matrix m = tensor::permute(rho.matrix(), rho.layout().dims(), perm);
  return DensityOperator::trusted(std::move(m), permuted_layout(rho.layout(), perm));
}

PureState reorder(const PureState& psi, const std::vector<std::string>& order) {
  const auto perm = order_to_perm(psi.layout(), order);
  Vector v = tensor::permute(psi.vector(), psi.layout().dims(), perm);
  return PureState(std::move(v), permuted_layout(psi.layout(), perm));
}

DensityOperator conjugate(const DensityOperator& rho, const Matrix& unitary) {
  if (unitary.rows() != rho.dim() || unitary.cols() != rho.dim())
    throw ShapeError("conjugate: unitary size does not match state");
  Matrix m = unitary * rho.matrix() * unitary.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityOperator::trusted(std::move(m), rho.layout());
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("max_abs_diff: size mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qside
