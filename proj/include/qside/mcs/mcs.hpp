#pragma once

#include "qside/core/state.hpp"
#include "qside/measures/config.hpp"
#include "qside/measures/decomposition.hpp"
#include "qside/redistribution/cost_pair.hpp"

#include <optional>

namespace qside::mcs {

/// Coefficients σ of a maximally correlated state Σ σ_ij |ii⟩⟨jj|. Must be
/// Hermitian, PSD and of unit trace within 1e-10 (MCSError otherwise).
class MCSMatrix {
 public:
  explicit MCSMatrix(Matrix sigma);

  const Matrix& sigma() const noexcept { return sigma_; }
  int k() const noexcept { return static_cast<int>(sigma_.rows()); }

 private:
  Matrix sigma_;
};

/// Σ_ij σ_ij |ii⟩⟨jj| on A' ⊗ C, both of dimension k.
DensityOperator mcs_state(const MCSMatrix& sigma);

struct MCSRealization {
  MCSMatrix sigma;
  redist::FourPartyState state;
};

/// |ψ⟩ = Σ_i √p_i |ψ_i⟩_AB |ii⟩_A'C for the compacted decomposition, and the
/// σ for which Tr_AB |ψ⟩⟨ψ| = mcs_state(σ): σ_ij = √(p_i p_j) ⟨ψ_j|ψ_i⟩.
MCSRealization mcs_from_decomposition(const measures::Decomposition& dec);

struct IdentitySides {
  double lhs = 0.0;  ///< ½ I(A:B|C) of the MCS purification
  double rhs = 0.0;  ///< Σ p_i S(Tr_B ψ_i)
};
IdentitySides mcs_cmi_identity(const measures::Decomposition& dec);

/// Cost pair at the MCS splitting; E vanishes because S(A') = S(C).
redist::CostPair mcs_cost_pair(const measures::Decomposition& dec);

/// The MCS splitting as an isometry from the rank-sized purifying system of
/// rho_ab (dA' = dC = number of compacted entries).
redist::SplittingIsometry mcs_splitting(const DensityOperator& rho_ab,
                                        const measures::Decomposition& dec);

/// V = Σ_i |ii⟩⟨i| · u for a k × r isometry u.
Matrix copy_isometry(const Matrix& u);

/// Minimizes ½ I(A:B|C) over MCS splittings V = copy_isometry(u). The
/// certificate is the best MCS splitting. k defaults to rank²; k < rank
/// raises ShapeError.
measures::MeasureReport eof_via_mcs(const DensityOperator& rho_ab, std::optional<int> k,
                                    const measures::OptimizerConfig& cfg);

}  // namespace qside::mcs
