#pragma once

#include "qside/core/layout.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace qside {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kStateTolerance = 1e-10;
/// Eigenvalues at or below this count as zero when taking numerical rank.
inline constexpr double kRankThreshold = 1e-12;

/// Positive unit-trace operator on a labeled tensor product.
///
/// Construction validates the invariants (Hermitian, unit trace, PSD, matching
/// size) within kStateTolerance and throws ValidationError naming the first
/// one violated. Instances are immutable.
class DensityOperator {
 public:
  DensityOperator(Matrix matrix, SystemLayout layout);

  /// Skips validation. For results of operations that preserve the invariants
  /// by construction (reductions, products, conjugations).
  static DensityOperator trusted(Matrix matrix, SystemLayout layout);

  const Matrix& matrix() const noexcept { return matrix_; }
  const SystemLayout& layout() const noexcept { return layout_; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }

  /// Eigenvalues in ascending order.
  Eigen::VectorXd eigenvalues() const;
  /// Number of eigenvalues above kRankThreshold.
  int rank() const;

  DensityOperator relabeled(const std::vector<std::string>& labels) const;

 private:
  struct Unchecked {};
  DensityOperator(Matrix matrix, SystemLayout layout, Unchecked);

  Matrix matrix_;
  SystemLayout layout_;
};

/// Unit vector on a labeled tensor product.
class PureState {
 public:
  PureState(Vector vector, SystemLayout layout);

  const Vector& vector() const noexcept { return vector_; }
  const SystemLayout& layout() const noexcept { return layout_; }
  int dim() const noexcept { return static_cast<int>(vector_.size()); }

  DensityOperator density() const;
  PureState relabeled(const std::vector<std::string>& labels) const;

 private:
  Vector vector_;
  SystemLayout layout_;
};

/// Kronecker composite; layout is a's subsystems then b's.
DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);
PureState tensor_product(const PureState& a, const PureState& b);

/// Reduced operator on `keep`, surviving subsystems in their original order.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep);
DensityOperator partial_trace(const PureState& psi, const std::vector<std::string>& keep);

/// Σ_k √λ_k |k⟩|k⟩_env over the eigenvalues above kRankThreshold. The
/// environment dimension equals the numerical rank.
PureState purify(const DensityOperator& rho, const std::string& env_label);

/// Reorders subsystems to the given label order (a permutation of all labels).
DensityOperator reorder(const DensityOperator& rho, const std::vector<std::string>& order);
PureState reorder(const PureState& psi, const std::vector<std::string>& order);

/// U ρ U† for a unitary acting on the full space.
DensityOperator conjugate(const DensityOperator& rho, const Matrix& unitary);

/// Largest entry-wise modulus of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace qside
