#pragma once

#include "qside/core/state.hpp"
#include "qside/measures/config.hpp"
#include "qside/measures/decomposition.hpp"
#include "qside/redistribution/splitting.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qside::measures {

/// Searches ½ I(A:B|C) over splittings E → A'⊗C in the direction of
/// cfg.mode. The trivial all-at-receiver splitting and every entry of
/// `seeds` always take part; seeds whose dimensions fit (dA', dC) also start
/// a local search, the rest compete at their own dimensions.
MeasureReport optimize_splitting(const DensityOperator& rho_ab, int d_a_prime, int d_c,
                                 const OptimizerConfig& cfg,
                                 std::span<const redist::SplittingIsometry> seeds = {});

/// Upper bound on the squashed entanglement: minimum of ½ I(A:B|C) over the
/// splittings found. Besides `seeds`, the MCS splitting of the best
/// formation decomposition is always a candidate, so the value never exceeds
/// eof(rho_ab) run with the same config. Throws ShapeError when
/// dA'·dC < rank(rho_ab).
MeasureReport squashed_upper(const DensityOperator& rho_ab, int d_a_prime, int d_c,
                             const OptimizerConfig& cfg,
                             std::span<const redist::SplittingIsometry> seeds = {});

/// Lower bound on the puffed entanglement: maximum of ½ I(A:B|C) over the
/// splittings found, seeded with the MCS splitting of the best assisted
/// decomposition. closed_form carries min{S(A), S(B)}.
MeasureReport puffed_lower(const DensityOperator& rho_ab, int d_a_prime, int d_c,
                           const OptimizerConfig& cfg,
                           std::span<const redist::SplittingIsometry> seeds = {});

/// One product term p · ρ_A ⊗ ρ_B of a separable decomposition.
struct ProductTerm {
  double p = 0.0;
  DensityOperator rho_a;
  DensityOperator rho_b;
};

/// Σ p_i ρ_A^i ⊗ ρ_B^i ⊗ |i⟩⟨i| on A, B, Ẽ (label "E~"). Throws
/// DecompositionError when the terms do not reproduce rho_ab within 1e-9.
DensityOperator flag_extension(const DensityOperator& rho_ab, std::span<const ProductTerm> parts);

/// The splitting of purify(rho_ab) whose C marginal is the flag register of
/// flag_extension; A' holds the purifications of the product terms plus a
/// copy of the flag.
redist::SplittingIsometry flag_splitting(const DensityOperator& rho_ab,
                                         std::span<const ProductTerm> parts);

/// Minimum of Σ p_i S(Tr_B ψ_i) over k-element decompositions found by the
/// search (upper bound). k defaults to rank².
MeasureReport eof(const DensityOperator& rho_ab, std::optional<int> k, const OptimizerConfig& cfg);

/// Maximum of the same average over decompositions (lower bound on the
/// asymptotic entanglement of assistance). closed_form carries min{S(A), S(B)}.
MeasureReport eoa_single(const DensityOperator& rho_ab, std::optional<int> k, const OptimizerConfig& cfg);

/// min{S(A), S(B)}.
double eoa_asymptotic(const DensityOperator& rho_ab);

/// Two-qubit concurrence max{0, λ1 − λ2 − λ3 − λ4}.
double concurrence(const DensityOperator& rho_ab);
/// Closed-form two-qubit entanglement of formation. ShapeError unless 2 × 2.
double wootters_eof(const DensityOperator& rho_ab);

/// min{S(A1)+S(A2), S(B1)+S(B2)} − min{S(A1),S(B1)} − min{S(A2),S(B2)},
/// with the left term evaluated on the four-party product ρ1 ⊗ ρ2.
double puffed_superadditivity_gap(const DensityOperator& rho1, const DensityOperator& rho2);
/// gap > 1e-9.
bool puffed_superadditivity_witness(const DensityOperator& rho1, const DensityOperator& rho2);

}  // namespace qside::measures
