#pragma once

// Test states shared by the unit tests and the acceptance binary.

#include "qside/core/families.hpp"
#include "qside/core/random.hpp"
#include "qside/measures/measures.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace qside::fixtures {

struct Separable {
  DensityOperator rho;
  std::vector<measures::ProductTerm> terms;
};

/// Σ p_i ρ_A^i ⊗ ρ_B^i with random qubit factors of random rank and
/// Dirichlet-like weights.
inline Separable random_separable(int parts, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::vector<double> w(parts);
  double total = 0.0;
  for (auto& x : w) total += (x = unit(rng));
  std::vector<measures::ProductTerm> terms;
  Matrix sum = Matrix::Zero(4, 4);
  for (int i = 0; i < parts; ++i) {
    const auto sub = derive_seed(seed, static_cast<std::uint64_t>(i));
    const auto a = random_density({2}, 1 + static_cast<int>(sub % 2), sub);
    const auto b = random_density({2}, 1 + static_cast<int>((sub >> 1) % 2), sub + 1).relabeled({"B"});
    const double p = w[i] / total;
    sum += p * tensor_product(a, b).matrix();
    terms.push_back({p, a, b});
  }
  return {DensityOperator(sum, bipartite_layout(2, 2)), std::move(terms)};
}

/// The classically correlated state with its two product terms.
inline Separable classical_pair() {
  const auto zero = DensityOperator((Matrix(2, 2) << 1, 0, 0, 0).finished(), {{"A", 2}});
  const auto one = DensityOperator((Matrix(2, 2) << 0, 0, 0, 1).finished(), {{"A", 2}});
  return {classically_correlated(),
          {{0.5, zero, zero.relabeled({"B"})}, {0.5, one, one.relabeled({"B"})}}};
}

/// Qubit diag(x, 1 − x) with binary entropy `bits`, x ≤ ½.
inline DensityOperator qubit_with_entropy(double bits, const std::string& label) {
  double lo = 0.0, hi = 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (binary_entropy(mid) < bits ? lo : hi) = mid;
  }
  const double x = 0.5 * (lo + hi);
  return DensityOperator((Matrix(2, 2) << x, 0, 0, 1 - x).finished(), {{label, 2}});
}

inline DensityOperator maximally_mixed_qubit(const std::string& label) {
  return DensityOperator(Matrix::Identity(2, 2) * 0.5, {{label, 2}});
}

/// ρ_A ⊗ ρ_B on the canonical bipartite layout.
inline DensityOperator product(const DensityOperator& a, const DensityOperator& b) {
  return tensor_product(a.relabeled({"A"}), b.relabeled({"B"}));
}

}  // namespace qside::fixtures
