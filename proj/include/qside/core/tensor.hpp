#pragma once

// Index bookkeeping for dense vectors and matrices over a tensor product.
// Basis ordering is big-endian: the first subsystem is the most significant
// digit, which matches the Kronecker product.

#include <Eigen/Dense>

#include <vector>

namespace qside::tensor {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

int product(const std::vector<int>& dims);

/// Splits every basis index of the full space into (index inside the masked
/// subsystems, index inside the rest). Both tables have length prod(dims).
struct Split {
  int dim_in = 1;
  int dim_out = 1;
  std::vector<int> in;
  std::vector<int> out;
};
Split split_indices(const std::vector<int>& dims, const std::vector<bool>& mask);

/// Reshape a state vector into a (masked × rest) matrix.
Matrix as_bipartite(const Vector& psi, const Split& split);
/// Inverse of as_bipartite.
Vector from_bipartite(const Matrix& m, const Split& split);

/// Trace out every subsystem not flagged in `keep`.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<bool>& keep);

/// Reorder subsystems of a state vector: new subsystem j is old perm[j].
Vector permute(const Vector& psi, const std::vector<int>& dims,
               const std::vector<int>& perm);
/// Same for an operator on the full space.
Matrix permute(const Matrix& rho, const std::vector<int>& dims,
               const std::vector<int>& perm);

}  // namespace qside::tensor
