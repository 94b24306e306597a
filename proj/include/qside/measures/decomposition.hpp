#pragma once

#include "qside/core/state.hpp"
#include "qside/redistribution/splitting.hpp"

#include <vector>

namespace qside::measures {

struct DecompositionEntry {
  double p = 0.0;
  PureState psi;
};

/// Pure-state ensemble {(p_i, ψ_i)} on a bipartite layout. Probabilities are
/// non-negative and sum to one within 1e-10; all states share one layout.
/// Violations raise DecompositionError.
class Decomposition {
 public:
  explicit Decomposition(std::vector<DecompositionEntry> entries);

  const std::vector<DecompositionEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const SystemLayout& layout() const noexcept { return entries_.front().psi.layout(); }

  /// Σ p_i |ψ_i⟩⟨ψ_i|.
  DensityOperator mixture() const;
  bool realizes(const DensityOperator& rho, double tol = 1e-9) const;

  /// Drops entries with p_i at or below `threshold` and renormalizes.
  Decomposition compacted(double threshold = kRankThreshold) const;

  /// Σ p_i S(Tr_B ψ_i).
  double average_entanglement() const;

 private:
  std::vector<DecompositionEntry> entries_;
};

/// The ensemble obtained by measuring the purifying system in the basis
/// picked out by the rows of `u` (k × rank, u†u = 1):
/// √p_i |ψ_i⟩ = Σ_e u(i, e) Ψ(·, e). Zero-weight entries are compacted away.
Decomposition decomposition_from_isometry(const DensityOperator& rho_ab, const Matrix& u);

/// Inverse direction: the isometry u with √p_i ψ_i = Σ_e u(i, e) Ψ(·, e) for
/// a decomposition of rho_ab. Throws DecompositionError if `dec` does not
/// realize rho_ab within 1e-9.
Matrix isometry_from_decomposition(const DensityOperator& rho_ab, const Decomposition& dec);

/// Σ_i p_i S(Tr_B ψ_i) as a function of u, with the Euclidean gradient under
/// Re Tr(G† du).
class AverageEntanglementObjective {
 public:
  explicit AverageEntanglementObjective(redist::PurifiedSource source);

  int cols() const noexcept { return source_.rank(); }
  double operator()(const Matrix& u, Matrix* grad) const;

 private:
  redist::PurifiedSource source_;
};

}  // namespace qside::measures
