#include "qside/cli/report.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

namespace qside::cli {

double round12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

namespace {

struct Fnv1a {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  void byte(unsigned char b) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) byte(static_cast<unsigned char>(v >> (8 * i)));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) byte(static_cast<unsigned char>(v >> (8 * i)));
  }
  void f64(double d) {
    std::uint64_t bits;
    std::memcpy(&bits, &d, sizeof bits);
    u64(bits);
  }
};

}  // namespace

std::string fingerprint(const DensityOperator& rho) {
  Fnv1a f;
  for (int d : rho.layout().dims()) f.u32(static_cast<std::uint32_t>(d));
  const auto& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      f.f64(m(i, j).real());
      f.f64(m(i, j).imag());
    }
  char buf[40];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016" PRIx64, f.h);
  return buf;
}

Json complex_json(std::complex<double> z) {
  return Json{{"re", round12(z.real())}, {"im", round12(z.imag())}};
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json certificate_json(const measures::Certificate& c) {
  if (const auto* v = std::get_if<redist::SplittingIsometry>(&c)) {
    return Json{{"type", "splitting"},
                {"d_a_prime", v->d_a_prime()},
                {"d_c", v->d_c()},
                {"d_e", v->d_e()},
                {"matrix", matrix_json(v->matrix())}};
  }
  if (const auto* d = std::get_if<measures::Decomposition>(&c)) {
    Json entries = Json::array();
    for (const auto& e : d->entries()) {
      Json psi = Json::array();
      for (Eigen::Index i = 0; i < e.psi.vector().size(); ++i) psi.push_back(complex_json(e.psi.vector()(i)));
      entries.push_back(Json{{"p", round12(e.p)}, {"psi", std::move(psi)}});
    }
    return Json{{"type", "decomposition"}, {"entries", std::move(entries)}};
  }
  return nullptr;
}

namespace {

void dump_into(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      dump_into(it.value(), depth + 1, out);
    }
    out += "\n" + close_pad + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      dump_into(j[i], depth + 1, out);
    }
    out += "\n" + close_pad + "]";
  } else if (j.is_number_float()) {
    const double x = j.get<double>();
    out += std::isfinite(x) ? format12(x) : "null";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& doc) {
  std::string out;
  dump_into(doc, 0, out);
  out += '\n';
  return out;
}

Json report_json(const measures::MeasureReport& r, bool with_certificate) {
  Json j;
  j["measure"] = r.measure;
  j["value"] = round12(r.value);
  j["bound"] = std::string(measures::to_string(r.bound));
  j["tolerance"] = round12(r.tolerance);
  j["entanglement_at_optimum"] = round12(r.entanglement_at_optimum);
  j["converged"] = r.converged;
  j["restarts_within_tolerance"] = r.restarts_within_tolerance;
  j["degenerate"] = r.degenerate;
  j["runs"] = r.runs;
  j["iterations"] = r.iterations;
  if (r.closed_form) j["closed_form"] = round12(*r.closed_form);
  if (with_certificate) j["certificate"] = certificate_json(r.certificate);
  return j;
}

}  // namespace qside::cli
