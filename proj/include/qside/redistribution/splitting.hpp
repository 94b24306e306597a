#pragma once

#include "qside/core/state.hpp"

#include <cstdint>

namespace qside::redist {

/// Isometry E → A'⊗C dividing the purifying system between the sender's
/// side information A' and the receiver's C. Row index is a'·dC + c.
class SplittingIsometry {
 public:
  /// Throws ShapeError when rows != d_a_prime·d_c or rows < cols, and
  /// ValidationError("isometry") when V†V deviates from 1 by more than 1e-10.
  SplittingIsometry(Matrix matrix, int d_a_prime, int d_c);

  const Matrix& matrix() const noexcept { return matrix_; }
  int d_a_prime() const noexcept { return d_a_prime_; }
  int d_c() const noexcept { return d_c_; }
  int d_e() const noexcept { return static_cast<int>(matrix_.cols()); }

  /// Same map with the roles of A' and C exchanged.
  SplittingIsometry swapped() const;

 private:
  Matrix matrix_;
  int d_a_prime_;
  int d_c_;
};

/// Haar-random splitting.
SplittingIsometry haar_splitting(int d_e, int d_a_prime, int d_c, std::uint64_t seed);
/// All of E handed to the receiver (dA' = 1).
SplittingIsometry all_at_receiver(int d_e);
/// All of E kept by the sender (dC = 1).
SplittingIsometry all_at_sender(int d_e);
/// Embeds `base` into larger output dimensions, if it fits, by mapping
/// a'·dC + c to a'·d_c + c. Returns false when it does not fit.
bool embed_splitting(const SplittingIsometry& base, int d_a_prime, int d_c, Matrix& out);

/// The purification of `rho_ab` used throughout: amplitudes Ψ(ab, e) with
/// |ψ⟩ = Σ Ψ(ab, e) |ab⟩|e⟩ and e running over the numerical rank.
struct PurifiedSource {
  Matrix amplitudes;
  int d_a = 1;
  int d_b = 1;
  int rank() const noexcept { return static_cast<int>(amplitudes.cols()); }
};

/// Throws ShapeError unless rho has exactly two subsystems (A then B).
PurifiedSource purified_source(const DensityOperator& rho_ab);

}  // namespace qside::redist
