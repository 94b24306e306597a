#pragma once

#include "qside/core/state.hpp"

#include <cstdint>
#include <random>

namespace qside {

using Rng = std::mt19937_64;

/// Independent sub-seed for stream `index` of a base seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Matrix with i.i.d. standard complex Gaussian entries.
Matrix ginibre(int rows, int cols, Rng& rng);

/// Haar-distributed isometry (V†V = 1): QR of a seeded complex Gaussian
/// matrix with the phases of R's diagonal moved into Q. Throws ShapeError if
/// rows < cols.
Matrix haar_isometry(int rows, int cols, std::uint64_t seed);
Matrix haar_unitary(int dim, std::uint64_t seed);

/// Orthonormalizes the columns of `m` (QR with positive diagonal in R).
Matrix orthonormalize(const Matrix& m);

}  // namespace qside
