#pragma once

#include "qside/core/state.hpp"
#include "qside/measures/config.hpp"

#include <functional>
#include <span>
#include <vector>

namespace qside::measures {

/// Objective on raw matrices: returns the value and, when the pointer is set,
/// the Euclidean gradient under Re Tr(G† dX).
using MatrixObjective = std::function<double(const Matrix&, Matrix*)>;

struct SearchRun {
  Matrix point;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct SearchResult {
  SearchRun best;
  std::size_t best_index = 0;
  std::vector<double> run_values;
  int within_tolerance = 0;
  bool degenerate = false;
  int total_iterations = 0;
};

/// Riemannian descent on the complex Stiefel manifold {X : X†X = 1}:
/// projected gradient, QR retraction, Barzilai–Borwein step lengths with
/// Armijo backtracking. Always minimizes.
SearchRun stiefel_descend(const MatrixObjective& f, const Matrix& start, const OptimizerConfig& cfg);

/// Multi-start search in the direction of cfg.mode. Runs the caller's `seeds`
/// first, then cfg.restarts Haar starts whose seeds derive from cfg.seed and
/// the restart index, so adding restarts only adds runs. The best run wins,
/// ties going to the lowest index.
SearchResult stiefel_search(const MatrixObjective& f, int rows, int cols,
                            std::span<const Matrix> seeds, const OptimizerConfig& cfg);

}  // namespace qside::measures
