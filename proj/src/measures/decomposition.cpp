#include "qside/measures/decomposition.hpp"

#include "qside/core/entropy.hpp"
#include "qside/core/errors.hpp"

#include <cmath>

namespace qside::measures {

Decomposition::Decomposition(std::vector<DecompositionEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DecompositionError("decomposition has no entries");
  double total = 0.0;
  for (const auto& e : entries_) {
    if (!(e.p >= 0.0)) throw DecompositionError("negative weight in decomposition");
    if (!(e.psi.layout() == entries_.front().psi.layout()))
      throw DecompositionError("decomposition entries have different layouts");
    total += e.p;
  }
  if (std::abs(total - 1.0) > kStateTolerance)
    throw DecompositionError("weights sum to " + std::to_string(total));
  if (layout().size() != 2) throw DecompositionError("decomposition must live on a bipartite layout");
}

DensityOperator Decomposition::mixture() const {
  const auto d = entries_.front().psi.dim();
  Matrix m = Matrix::Zero(d, d);
  for (const auto& e : entries_) m += e.p * e.psi.vector() * e.psi.vector().adjoint();
  return DensityOperator::trusted(std::move(m), layout());
}

bool Decomposition::realizes(const DensityOperator& rho, double tol) const {
  if (!(rho.layout() == layout())) return false;
  return max_abs_diff(mixture().matrix(), rho.matrix()) <= tol;
}

Decomposition Decomposition::compacted(double threshold) const {
  std::vector<DecompositionEntry> kept;
  double total = 0.0;
  for (const auto& e : entries_)
    if (e.p > threshold) {
      kept.push_back(e);
      total += e.p;
    }
  if (kept.empty()) throw DecompositionError("every weight is below the compaction threshold");
  for (auto& e : kept) e.p /= total;
  return Decomposition(std::move(kept));
}

double Decomposition::average_entanglement() const {
  const std::string& a = layout()[0].label;
  double s = 0.0;
  for (const auto& e : entries_) s += e.p * marginal_entropy(e.psi, {a});
  return s;
}

Decomposition decomposition_from_isometry(const DensityOperator& rho_ab, const Matrix& u) {
  const auto src = redist::purified_source(rho_ab);
  if (u.cols() != src.rank())
    throw ShapeError("decomposition isometry has " + std::to_string(u.cols()) + " columns, rank is " +
                     std::to_string(src.rank()));
  const Matrix unnormalized = src.amplitudes * u.transpose();  // column i = √p_i ψ_i
  std::vector<DecompositionEntry> entries;
  double total = 0.0;
  for (Eigen::Index i = 0; i < unnormalized.cols(); ++i) {
    const double p = unnormalized.col(i).squaredNorm();
    if (p <= kRankThreshold) continue;
    entries.push_back({p, PureState(unnormalized.col(i) / std::sqrt(p), rho_ab.layout())});
    total += p;
  }
  for (auto& e : entries) e.p /= total;
  return Decomposition(std::move(entries));
}

Matrix isometry_from_decomposition(const DensityOperator& rho_ab, const Decomposition& dec) {
  if (!dec.realizes(rho_ab)) throw DecompositionError("decomposition does not realize rho_AB");
  const auto src = redist::purified_source(rho_ab);
  const Eigen::VectorXd lambda = src.amplitudes.colwise().squaredNorm().transpose();
  Matrix u(static_cast<Eigen::Index>(dec.size()), src.rank());
  for (std::size_t i = 0; i < dec.size(); ++i) {
    const auto& e = dec.entries()[i];
    Vector row = src.amplitudes.adjoint() * (std::sqrt(e.p) * e.psi.vector());
    for (Eigen::Index k = 0; k < row.size(); ++k) row(k) /= lambda(k);
    u.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return u;
}

AverageEntanglementObjective::AverageEntanglementObjective(redist::PurifiedSource source)
    : source_(std::move(source)) {}

double AverageEntanglementObjective::operator()(const Matrix& u, Matrix* grad) const {
  const Matrix& psi = source_.amplitudes;
  const int da = source_.d_a;
  const int db = source_.d_b;
  const bool a_side = da <= db;
  const int rows = a_side ? da : db;
  const int cols = a_side ? db : da;
  const Matrix unnormalized = psi * u.transpose();
  const auto k = unnormalized.cols();

  Matrix g;
  if (grad) g = Matrix::Zero(unnormalized.rows(), k);
  double value = 0.0;
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto col = unnormalized.col(i);
    // M(x, y) with x on the smaller side
    for (int a = 0; a < da; ++a)
      for (int b = 0; b < db; ++b) {
        const auto amp = col(a * db + b);
        if (a_side)
          m(a, b) = amp;
        else
          m(b, a) = amp;
      }
    const Matrix reduced = m * m.adjoint();
    const double p = reduced.trace().real();
    if (p <= 1e-300) continue;
    Eigen::SelfAdjointEigenSolver<Matrix> es(reduced, grad ? Eigen::ComputeEigenvectors
                                                           : Eigen::EigenvaluesOnly);
    const auto& mu = es.eigenvalues();
    Eigen::VectorXd logs(mu.size());
    double s = p * std::log2(p);
    for (Eigen::Index j = 0; j < mu.size(); ++j) {
      const double l = std::max(mu(j), 0.0);
      if (l > 0.0) s -= l * std::log2(l);
      logs(j) = std::log2(std::max(l, 1e-300) / p);
    }
    value += s;
    if (grad) {
      const Matrix lm = es.eigenvectors() * logs.asDiagonal() * es.eigenvectors().adjoint() * m;
      for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b) g(a * db + b, i) = -2.0 * (a_side ? lm(a, b) : lm(b, a));
    }
  }
  if (grad) *grad = (psi.adjoint() * g).transpose();
  return value;
}

}  // namespace qside::measures
