#pragma once

#include "qside/core/state.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qside {

using ParamMap = std::map<std::string, double>;

/// Layout {A: da, B: db}.
SystemLayout bipartite_layout(int da, int db);

/// |Φ+⟩⟨Φ+| on two qubits.
DensityOperator bell_state();
/// ½(|00⟩⟨00| + |11⟩⟨11|).
DensityOperator classically_correlated();
/// p·|ψ−⟩⟨ψ−| + (1 − p)·I/4.
DensityOperator werner(double p);
/// p·|Φ+_d⟩⟨Φ+_d| + (1 − p)·I/d² on d × d.
DensityOperator isotropic(int d, double p);
/// Normalized G G† for a dim × rank Ginibre G; subsystems labeled A, B, C, ...
DensityOperator random_density(const std::vector<int>& dims, int rank, std::uint64_t seed);
/// Haar-random pure state on the given dims.
PureState random_pure(const std::vector<int>& dims, std::uint64_t seed);

/// Labels A, B, C, ... for n subsystems.
std::vector<std::string> default_labels(std::size_t n);

/// Named constructor: bell, classically_correlated, werner{p},
/// isotropic{d, p}, random{da, db, rank, seed} (db defaults to 1, which
/// gives a single system A). Throws ParamError on bad names or values.
DensityOperator state_family(std::string_view name, const ParamMap& params);

}  // namespace qside
