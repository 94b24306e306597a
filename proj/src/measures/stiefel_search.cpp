#include "qside/measures/stiefel_search.hpp"

#include "qside/core/errors.hpp"
#include "qside/core/random.hpp"

#include <algorithm>
#include <cmath>

namespace qside::measures {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kGradientFloor = 1e-11;
constexpr int kMaxBacktracks = 50;

double real_inner(const Matrix& a, const Matrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum().real();
}

// Tangent projection of a Euclidean gradient at X.
Matrix riemannian_gradient(const Matrix& x, const Matrix& g) {
  const Matrix xg = x.adjoint() * g;
  return g - x * (0.5 * (xg + xg.adjoint()));
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 0) throw ParamError("restarts must be >= 0");
  if (max_iterations < 1) throw ParamError("max_iterations must be >= 1");
  if (!(tolerance > 0.0)) throw ParamError("tolerance must be > 0");
  if (stagnation_window < 1) throw ParamError("stagnation_window must be >= 1");
}

std::string_view to_string(Bound b) {
  switch (b) {
    case Bound::upper: return "upper";
    case Bound::lower: return "lower";
    case Bound::exact: return "exact";
  }
  return "exact";
}

std::string_view to_string(Mode m) { return m == Mode::minimize ? "minimize" : "maximize"; }

SearchRun stiefel_descend(const MatrixObjective& f, const Matrix& start, const OptimizerConfig& cfg) {
  SearchRun run;
  Matrix x = orthonormalize(start);
  Matrix g;
  double fx = f(x, &g);
  Matrix xi = riemannian_gradient(x, g);
  double step = 1.0 / std::max(xi.norm(), 1e-8);
  int stalled = 0;
  int it = 0;
  for (; it < cfg.max_iterations; ++it) {
    const double gn2 = xi.squaredNorm();
    if (std::sqrt(gn2) < kGradientFloor) {
      run.converged = true;
      break;
    }
    double t = step;
    Matrix xn;
    double fn = fx;
    bool accepted = false;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      xn = orthonormalize(x - t * xi);
      fn = f(xn, nullptr);
      if (fn <= fx - kArmijo * t * gn2) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      // no descent along the gradient at machine precision: stationary
      run.converged = true;
      break;
    }
    Matrix gn;
    fn = f(xn, &gn);
    const Matrix xin = riemannian_gradient(xn, gn);
    const Matrix s = xn - x;
    const Matrix y = xin - xi;
    const double sy = real_inner(s, y);
    if (sy > 0.0)
      step = (it % 2 == 0) ? s.squaredNorm() / sy : sy / std::max(y.squaredNorm(), 1e-300);
    else
      step = 2.0 * t;
    step = std::clamp(step, 1e-12, 1e6);

    const double decrease = fx - fn;
    x = std::move(xn);
    fx = fn;
    xi = xin;
    stalled = decrease < cfg.tolerance ? stalled + 1 : 0;
    if (stalled >= cfg.stagnation_window) {
      run.converged = true;
      ++it;
      break;
    }
  }
  run.point = std::move(x);
  run.value = fx;
  run.iterations = it;
  return run;
}

SearchResult stiefel_search(const MatrixObjective& f, int rows, int cols,
                            std::span<const Matrix> seeds, const OptimizerConfig& cfg) {
  cfg.validate();
  if (cols < 1 || rows < cols) throw ShapeError("stiefel_search: need rows >= cols >= 1");
  const double sign = cfg.mode == Mode::minimize ? 1.0 : -1.0;
  const MatrixObjective signed_f = [&](const Matrix& x, Matrix* grad) {
    const double v = f(x, grad);
    if (grad && sign < 0) *grad = -*grad;
    return sign * v;
  };

  std::vector<Matrix> starts(seeds.begin(), seeds.end());
  for (const auto& s : starts)
    if (s.rows() != rows || s.cols() != cols) throw ShapeError("stiefel_search: seed has wrong shape");
  for (int r = 0; r < cfg.restarts; ++r)
    starts.push_back(haar_isometry(rows, cols, derive_seed(cfg.seed, static_cast<std::uint64_t>(r))));
  if (starts.empty()) throw ParamError("stiefel_search: no starting points (restarts = 0, no seeds)");

  // Runs are independent; evaluated in index order so merging is trivially
  // deterministic.
  std::vector<SearchRun> runs;
  runs.reserve(starts.size());
  for (const auto& s : starts) runs.push_back(stiefel_descend(signed_f, s, cfg));

  SearchResult out;
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i].value < runs[best].value) best = i;
  const double window = 10.0 * cfg.tolerance;
  for (const auto& r : runs) {
    out.run_values.push_back(sign * r.value);
    out.total_iterations += r.iterations;
    if (r.value - runs[best].value <= window) ++out.within_tolerance;
  }
  out.degenerate = out.within_tolerance >= 2;
  out.best_index = best;
  out.best = std::move(runs[best]);
  out.best.value *= sign;
  return out;
}

}  // namespace qside::measures
