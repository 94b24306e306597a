#pragma once

#include "qside/core/state.hpp"
#include "qside/redistribution/splitting.hpp"

namespace qside::redist {

/// Qubits and ebits per copy. Negative ebits mean entanglement is gained.
struct CostPair {
  double q = 0.0;
  double e = 0.0;
};

/// Pure state on A, B, A', C (labels canonical, in that order).
class FourPartyState {
 public:
  explicit FourPartyState(PureState pure);

  const PureState& pure() const noexcept { return pure_; }
  int d_a() const noexcept { return pure_.layout()[0].dim; }
  int d_b() const noexcept { return pure_.layout()[1].dim; }
  int d_a_prime() const noexcept { return pure_.layout()[2].dim; }
  int d_c() const noexcept { return pure_.layout()[3].dim; }

  DensityOperator marginal_ab() const;
  DensityOperator marginal_side_information() const;

 private:
  PureState pure_;
};

inline const std::string kA = "A";
inline const std::string kB = "B";
inline const std::string kAPrime = "A'";
inline const std::string kC = "C";

/// (1_AB ⊗ V)|ψ⟩_ABE with |ψ⟩_ABE = purify(rho_ab). Throws ShapeError when
/// V's input dimension differs from rank(rho_ab).
FourPartyState split_purification(const DensityOperator& rho_ab, const SplittingIsometry& v);

/// Q = ½ I(A:B|C), E = ½ I(A:A') − ½ I(A:C).
CostPair cost_pair(const FourPartyState& state);

/// S(A|C) − Q; agrees with cost_pair(state).e by purity of the global state.
double entanglement_balance(const FourPartyState& state);

/// Exchanges A' and C.
FourPartyState swap_sides(const FourPartyState& state);

/// Recovers the splitting isometry that maps purify(rho_ab) to `state`, which
/// must be a purification of rho_ab. Throws ShapeError when the AB marginal
/// does not reproduce rho_ab within 1e-9.
SplittingIsometry splitting_from_purification(const DensityOperator& rho_ab,
                                              const FourPartyState& state);

}  // namespace qside::redist
