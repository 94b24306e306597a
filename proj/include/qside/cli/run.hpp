#pragma once

#include "qside/core/families.hpp"
#include "qside/measures/config.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qside::cli {

enum class Command { measure, redistribute, verify, sweep };
enum class Format { json, csv };

/// name=start:stop:step
struct Grid {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};
Grid parse_grid(const std::string& text);

inline constexpr int kDefaultDimCap = 64;

struct RunSpec {
  Command command = Command::measure;
  std::optional<std::string> state_path;
  /// Inline state-spec document; takes precedence over state_path.
  std::optional<std::string> state_document;
  std::optional<std::string> family;
  ParamMap params;
  std::vector<std::string> measure_names;
  std::optional<int> d_a_prime;
  std::optional<int> d_c;
  std::optional<int> k;
  measures::OptimizerConfig optimizer;
  std::optional<std::string> out_path;
  Format format = Format::json;
  int dim_cap = kDefaultDimCap;
  int cases = 100;
  std::optional<Grid> grid;
  /// Fixed timestamp for the report; the current UTC time when unset.
  std::optional<std::string> timestamp;
};

struct RunOutput {
  std::string document;
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Measure names accepted by `measure` and `sweep`.
const std::vector<std::string>& known_measures();

/// Executes the command and returns the report. Usage and validation
/// problems propagate as exceptions (UsageError, CapError, ParseError,
/// ValidationError, ParamError, ShapeError).
RunOutput run(const RunSpec& spec);

/// Parses command-line flags into a RunSpec. Throws UsageError.
RunSpec parse_args(int argc, const char* const* argv);

/// Full CLI behaviour: parse, run, write the report to --out or `out`,
/// report errors on `err`; returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qside::cli
