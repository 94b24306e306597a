#pragma once

#include "qside/core/tensor.hpp"
#include "qside/redistribution/splitting.hpp"

#include <array>

namespace qside::redist {

/// ½ I(A:B|C) of (1 ⊗ V)|ψ⟩ as a function of the raw splitting matrix V, with
/// its Euclidean gradient under the real inner product Re Tr(G† dV).
///
/// On the pure state the four entropies reduce to S(AC), S(BC), S(A') and
/// S(C); each is evaluated on whichever side of its cut is smaller.
class ConditionalInfoObjective {
 public:
  ConditionalInfoObjective(PurifiedSource source, int d_a_prime, int d_c);

  int rows() const noexcept { return d_a_prime_ * d_c_; }
  int cols() const noexcept { return source_.rank(); }

  double operator()(const Matrix& v, Matrix* grad) const;

 private:
  PurifiedSource source_;
  int d_a_prime_;
  int d_c_;
  std::array<tensor::Split, 4> cuts_;
  std::array<double, 4> weights_;
};

}  // namespace qside::redist
