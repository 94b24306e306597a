#pragma once

#include "qside/measures/decomposition.hpp"
#include "qside/redistribution/splitting.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace qside::measures {

enum class Mode { minimize, maximize };

struct OptimizerConfig {
  int restarts = 4;
  int max_iterations = 500;
  /// Stop once the objective improves by less than this for
  /// `stagnation_window` consecutive iterations.
  double tolerance = 1e-7;
  int stagnation_window = 10;
  std::uint64_t seed = 0;
  Mode mode = Mode::minimize;

  /// Throws ParamError on non-positive restarts, iterations, tolerance or window.
  void validate() const;
};

/// Direction of the reported value relative to the quantity it estimates.
enum class Bound { upper, lower, exact };

std::string_view to_string(Bound b);
std::string_view to_string(Mode m);

using Certificate = std::variant<std::monostate, redist::SplittingIsometry, Decomposition>;

struct MeasureReport {
  std::string measure;
  double value = 0.0;
  Bound bound = Bound::exact;
  Certificate certificate;
  /// S(A|C) − Q at the best point found (signed, ebits).
  double entanglement_at_optimum = 0.0;
  bool converged = true;
  /// Runs whose final value lies within 10·tolerance of the best.
  int restarts_within_tolerance = 0;
  bool degenerate = false;
  int runs = 0;
  int iterations = 0;
  double tolerance = 0.0;
  /// Known closed-form value reported alongside a bound, when one exists.
  std::optional<double> closed_form;
};

}  // namespace qside::measures
