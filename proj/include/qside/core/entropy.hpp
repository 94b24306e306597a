#pragma once

#include "qside/core/state.hpp"

#include <string>
#include <vector>

namespace qside {

/// Entropy in bits.
struct EntropyValue {
  double bits = 0.0;
};

/// Eigenvalues in [-1e-10, 0) are clipped to zero.
inline constexpr double kEigenClip = 1e-10;

/// -Σ λ log2 λ over the eigenvalues of a Hermitian matrix. Throws
/// PositivityError on an eigenvalue below -kEigenClip.
double entropy_bits(const Matrix& hermitian);
double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues);

EntropyValue von_neumann_entropy(const DensityOperator& rho);

/// Entropy of the marginal on `part`.
double marginal_entropy(const DensityOperator& rho, const std::vector<std::string>& part);
double marginal_entropy(const PureState& psi, const std::vector<std::string>& part);

/// S(A) + S(B) - S(AB); the two parts must partition the layout.
double mutual_information(const DensityOperator& rho, const std::vector<std::string>& part_a,
                          const std::vector<std::string>& part_b);

/// S(AC) + S(BC) - S(ABC) - S(C); the three parts must partition the layout.
double conditional_mutual_information(const DensityOperator& rho,
                                      const std::vector<std::string>& part_a,
                                      const std::vector<std::string>& part_b,
                                      const std::vector<std::string>& part_c);
/// Pure-state variant; subsystems outside the three parts are traced out.
double conditional_mutual_information(const PureState& psi,
                                      const std::vector<std::string>& part_a,
                                      const std::vector<std::string>& part_b,
                                      const std::vector<std::string>& part_c);

/// S(AC) - S(C).
double conditional_entropy(const DensityOperator& rho, const std::vector<std::string>& part_a,
                           const std::vector<std::string>& part_c);

double binary_entropy(double p);

}  // namespace qside
