#include "qside/redistribution/splitting.hpp"

#include "qside/core/errors.hpp"
#include "qside/core/random.hpp"

#include <cmath>
#include <string>

namespace qside::redist {

SplittingIsometry::SplittingIsometry(Matrix matrix, int d_a_prime, int d_c)
    : matrix_(std::move(matrix)), d_a_prime_(d_a_prime), d_c_(d_c) {
  if (d_a_prime_ < 1 || d_c_ < 1) throw ShapeError("splitting dimensions must be >= 1");
  if (matrix_.rows() != static_cast<Eigen::Index>(d_a_prime_) * d_c_)
    throw ShapeError("splitting matrix has " + std::to_string(matrix_.rows()) + " rows, expected " +
                     std::to_string(d_a_prime_ * d_c_));
  if (matrix_.cols() < 1 || matrix_.rows() < matrix_.cols())
    throw ShapeError("splitting needs dA'·dC >= dE >= 1");
  const auto n = matrix_.cols();
  const double dev = (matrix_.adjoint() * matrix_ - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (dev > kStateTolerance)
    throw ValidationError("isometry", "V†V deviates from identity by " + std::to_string(dev));
}

SplittingIsometry SplittingIsometry::swapped() const {
  Matrix out(matrix_.rows(), matrix_.cols());
  for (int a = 0; a < d_a_prime_; ++a)
    for (int c = 0; c < d_c_; ++c) out.row(c * d_a_prime_ + a) = matrix_.row(a * d_c_ + c);
  return SplittingIsometry(std::move(out), d_c_, d_a_prime_);
}

SplittingIsometry haar_splitting(int d_e, int d_a_prime, int d_c, std::uint64_t seed) {
  if (d_a_prime < 1 || d_c < 1) throw ShapeError("splitting dimensions must be >= 1");
  return SplittingIsometry(haar_isometry(d_a_prime * d_c, d_e, seed), d_a_prime, d_c);
}

SplittingIsometry all_at_receiver(int d_e) {
  return SplittingIsometry(Matrix::Identity(d_e, d_e), 1, d_e);
}

SplittingIsometry all_at_sender(int d_e) {
  return SplittingIsometry(Matrix::Identity(d_e, d_e), d_e, 1);
}

bool embed_splitting(const SplittingIsometry& base, int d_a_prime, int d_c, Matrix& out) {
  if (base.d_a_prime() > d_a_prime || base.d_c() > d_c) return false;
  out = Matrix::Zero(static_cast<Eigen::Index>(d_a_prime) * d_c, base.d_e());
  for (int a = 0; a < base.d_a_prime(); ++a)
    for (int c = 0; c < base.d_c(); ++c)
      out.row(a * d_c + c) = base.matrix().row(a * base.d_c() + c);
  return true;
}

PurifiedSource purified_source(const DensityOperator& rho_ab) {
  if (rho_ab.layout().size() != 2)
    throw ShapeError("expected a bipartite state, got layout " + to_string(rho_ab.layout()));
  const int da = rho_ab.layout()[0].dim;
  const int db = rho_ab.layout()[1].dim;
  const auto psi = purify(rho_ab, "__env");
  const int r = psi.layout()[2].dim;
  PurifiedSource src;
  src.d_a = da;
  src.d_b = db;
  src.amplitudes.resize(da * db, r);
  for (int ab = 0; ab < da * db; ++ab)
    for (int e = 0; e < r; ++e) src.amplitudes(ab, e) = psi.vector()(static_cast<Eigen::Index>(ab) * r + e);
  return src;
}

}  // namespace qside::redist
