#pragma once

#include "qside/core/state.hpp"
#include "qside/measures/config.hpp"

#include <json.hpp>

#include <string>

namespace qside::cli {

using Json = nlohmann::ordered_json;

/// x rounded to 12 significant digits (negative zero becomes zero).
double round12(double x);
/// Decimal text with 12 significant digits.
std::string format12(double x);

/// FNV-1a 64 over the dims (int32, little endian) followed by the row-major
/// matrix entries (re, im as IEEE-754 doubles, little endian).
std::string fingerprint(const DensityOperator& rho);

Json complex_json(std::complex<double> z);
Json matrix_json(const Matrix& m);
Json certificate_json(const measures::Certificate& c);
/// Pretty-printed JSON text (two-space indent) with every floating-point
/// number written by format12.
std::string dump(const Json& doc);

Json report_json(const measures::MeasureReport& r, bool with_certificate = true);

}  // namespace qside::cli
