#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qside::cli {

/// Worst deviation seen for one exact identity across a seeded case sweep.
struct IdentityCheck {
  std::string name;
  double max_deviation = 0.0;
  int cases = 0;
  bool passed = true;
};

inline constexpr double kIdentityThreshold = 1e-8;

/// Runs every exact identity on `cases` seeded random bipartite states with
/// random splittings and decompositions (ρ_AB of dims 2..3 × 2..3 with
/// dim(ABE) ≤ 36). A check passes when its max deviation is ≤ threshold.
///
/// Checks: mcs_cmi_identity, mcs_entanglement_zero, mcs_marginal,
/// mcs_side_symmetry, swap_invariance, balance_equivalence, cmi_bound,
/// cost_nonnegative, strong_subadditivity, mutual_information_extreme,
/// local_unitary_invariance, purification_roundtrip.
std::vector<IdentityCheck> run_identity_suite(int cases, std::uint64_t seed,
                                              double threshold = kIdentityThreshold);

}  // namespace qside::cli
