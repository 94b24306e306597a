#include "qside/core/entropy.hpp"
#include "qside/core/errors.hpp"
#include "qside/measures/measures.hpp"

#include <algorithm>
#include <cmath>

namespace qside::measures {

double concurrence(const DensityOperator& rho_ab) {
  const auto& layout = rho_ab.layout();
  if (layout.size() != 2 || layout[0].dim != 2 || layout[1].dim != 2)
    throw ShapeError("concurrence needs a two-qubit state, got " + to_string(layout));
  Matrix yy = Matrix::Zero(4, 4);  // σy ⊗ σy
  yy(0, 3) = yy(3, 0) = -1.0;
  yy(1, 2) = yy(2, 1) = 1.0;
  const Matrix& rho = rho_ab.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  const Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix sqrt_rho = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
  // √ρ ρ̃ √ρ = M M†, so the λ_i are singular values of M; avoids √ of tiny eigenvalues
  const Matrix m = sqrt_rho * yy * sqrt_rho.conjugate();
  Eigen::JacobiSVD<Matrix> svd(m);
  std::vector<double> l(svd.singularValues().data(), svd.singularValues().data() + 4);
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double wootters_eof(const DensityOperator& rho_ab) {
  const double c = std::min(concurrence(rho_ab), 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

}  // namespace qside::measures
