#include "qside/core/random.hpp"

#include "qside/core/errors.hpp"

#include <cmath>
#include <complex>

namespace qside {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Matrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  // fill row by row so the stream order is independent of storage order
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = std::complex<double>(re, im);
    }
  return g;
}

Matrix orthonormalize(const Matrix& m) {
  const auto rows = m.rows();
  const auto cols = m.cols();
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const auto d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

Matrix haar_isometry(int rows, int cols, std::uint64_t seed) {
  if (cols < 1 || rows < cols)
    throw ShapeError("haar_isometry: need rows >= cols >= 1, got " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  Rng rng(seed);
  return orthonormalize(ginibre(rows, cols, rng));
}

Matrix haar_unitary(int dim, std::uint64_t seed) { return haar_isometry(dim, dim, seed); }

}  // namespace qside
