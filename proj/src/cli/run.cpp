#include "qside/cli/run.hpp"

#include "qside/cli/errors.hpp"
#include "qside/cli/report.hpp"
#include "qside/cli/state_spec.hpp"
#include "qside/cli/verify.hpp"
#include "qside/core/entropy.hpp"
#include "qside/mcs/mcs.hpp"
#include "qside/measures/measures.hpp"
#include "qside/redistribution/cost_pair.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef QSIDE_VERSION
#define QSIDE_VERSION "0.0.0"
#endif

namespace qside::cli {

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::measure: return "measure";
    case Command::redistribute: return "redistribute";
    case Command::verify: return "verify";
    case Command::sweep: return "sweep";
  }
  return "measure";
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read state file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string describe_params(const ParamMap& params) {
  std::string out;
  for (const auto& [k, v] : params) out += " " + k + "=" + format12(v);
  return out;
}

struct LoadedState {
  DensityOperator rho;
  std::string source;
};

LoadedState load_state(const RunSpec& spec) {
  if (spec.state_document) return {parse_state_spec(*spec.state_document), "inline"};
  if (spec.state_path) return {parse_state_spec(read_file(*spec.state_path)), "file:" + *spec.state_path};
  if (spec.family)
    return {state_family(*spec.family, spec.params), "family:" + *spec.family + describe_params(spec.params)};
  throw UsageError("no state given: use --state <path> or --family <name>");
}

void check_cap(const DensityOperator& rho, const RunSpec& spec) {
  if (rho.dim() > spec.dim_cap)
    throw CapError("state dimension " + std::to_string(rho.dim()) + " exceeds the cap of " +
                   std::to_string(spec.dim_cap));
  if (spec.d_a_prime && spec.d_c && *spec.d_a_prime * *spec.d_c > spec.dim_cap)
    throw CapError("dA'·dC exceeds the cap of " + std::to_string(spec.dim_cap));
}

void require_bipartite(const DensityOperator& rho) {
  if (rho.layout().size() != 2)
    throw UsageError("this command needs a bipartite state, got layout " + to_string(rho.layout()));
}

Json optimizer_json(const measures::OptimizerConfig& cfg) {
  return Json{{"restarts", cfg.restarts},
              {"max_iterations", cfg.max_iterations},
              {"tolerance", round12(cfg.tolerance)},
              {"stagnation_window", cfg.stagnation_window},
              {"seed", cfg.seed}};
}

Json state_json(const LoadedState& s) {
  return Json{{"source", s.source},
              {"dims", s.rho.layout().dims()},
              {"rank", s.rho.rank()},
              {"fingerprint", fingerprint(s.rho)}};
}

Json header(const RunSpec& spec, const std::string& timestamp) {
  Json doc;
  doc["tool"] = "qside";
  doc["version"] = QSIDE_VERSION;
  doc["command"] = command_name(spec.command);
  doc["timestamp"] = timestamp;
  doc["seed"] = spec.optimizer.seed;
  doc["tolerance"] = round12(spec.optimizer.tolerance);
  doc["optimizer"] = optimizer_json(spec.optimizer);
  return doc;
}

measures::MeasureReport exact_report(const std::string& name, double value, double tol) {
  measures::MeasureReport r;
  r.measure = name;
  r.value = value;
  r.bound = measures::Bound::exact;
  r.tolerance = tol;
  return r;
}

measures::MeasureReport run_measure(const std::string& name, const DensityOperator& rho, const RunSpec& spec) {
  require_bipartite(rho);
  const int rank = rho.rank();
  const int d_ap = spec.d_a_prime.value_or(rank);
  const int d_c = spec.d_c.value_or(rank);
  const auto& cfg = spec.optimizer;
  if (name == "squashed_upper") return measures::squashed_upper(rho, d_ap, d_c, cfg);
  if (name == "puffed_lower") return measures::puffed_lower(rho, d_ap, d_c, cfg);
  if (name == "eof") return measures::eof(rho, spec.k, cfg);
  if (name == "eof_via_mcs") return mcs::eof_via_mcs(rho, spec.k, cfg);
  if (name == "eoa_single") return measures::eoa_single(rho, spec.k, cfg);
  if (name == "eoa_asymptotic") return exact_report(name, measures::eoa_asymptotic(rho), cfg.tolerance);
  if (name == "wootters_eof") return exact_report(name, measures::wootters_eof(rho), cfg.tolerance);
  throw UsageError("unknown measure '" + name + "'");
}

void validate_measures(const RunSpec& spec) {
  if (spec.measure_names.empty()) throw UsageError("no measures given: use --measure <names>");
  for (const auto& m : spec.measure_names)
    if (std::find(known_measures().begin(), known_measures().end(), m) == known_measures().end())
      throw UsageError("unknown measure '" + m + "'");
}

// One CSV line per result.
struct CsvRow {
  std::string point;
  std::string measure;
  double value = 0.0;
  std::string bound;
  double tolerance = 0.0;
  std::string fingerprint;
  std::string converged;
  std::string passed;
  std::string extra;
};

std::string csv_document(const RunSpec& spec, const std::string& timestamp, const std::vector<CsvRow>& rows) {
  std::ostringstream os;
  os << "# qside " << QSIDE_VERSION << " command=" << command_name(spec.command) << " timestamp=" << timestamp
     << '\n';
  os << "point,measure,value,bound,tolerance,seed,fingerprint,converged,passed,extra\n";
  for (const auto& r : rows)
    os << r.point << ',' << r.measure << ',' << format12(r.value) << ',' << r.bound << ','
       << format12(r.tolerance) << ',' << spec.optimizer.seed << ',' << r.fingerprint << ',' << r.converged
       << ',' << r.passed << ',' << r.extra << '\n';
  return os.str();
}

CsvRow csv_row(const std::string& point, const measures::MeasureReport& r, const std::string& fp) {
  return {point, r.measure, r.value, std::string(measures::to_string(r.bound)), r.tolerance, fp,
          r.converged ? "true" : "false", "", ""};
}

Json result_entry(const measures::MeasureReport& r, const RunSpec& spec, const std::string& fp) {
  Json j;
  j["measure"] = r.measure;
  j["seed"] = spec.optimizer.seed;
  j["fingerprint"] = fp;
  const Json full = report_json(r);
  for (auto it = full.begin(); it != full.end(); ++it)
    if (it.key() != "measure") j[it.key()] = it.value();
  return j;
}

RunOutput finish(const RunSpec& spec, Json doc, const std::vector<CsvRow>& rows, int exit_code) {
  if (spec.format == Format::csv) return {csv_document(spec, doc["timestamp"].get<std::string>(), rows), exit_code};
  return {dump(doc), exit_code};
}

RunOutput run_measure_command(const RunSpec& spec, const std::string& ts) {
  validate_measures(spec);
  const auto state = load_state(spec);
  check_cap(state.rho, spec);
  const auto fp = fingerprint(state.rho);
  Json doc = header(spec, ts);
  doc["state"] = state_json(state);
  Json results = Json::array();
  std::vector<CsvRow> rows;
  for (const auto& name : spec.measure_names) {
    const auto r = run_measure(name, state.rho, spec);
    results.push_back(result_entry(r, spec, fp));
    rows.push_back(csv_row("0", r, fp));
  }
  doc["results"] = std::move(results);
  return finish(spec, std::move(doc), rows, kExitOk);
}

RunOutput run_redistribute_command(const RunSpec& spec, const std::string& ts) {
  const auto state = load_state(spec);
  check_cap(state.rho, spec);
  require_bipartite(state.rho);
  const auto rho = state.rho.relabeled({redist::kA, redist::kB});
  const int rank = rho.rank();
  const int d_ap = spec.d_a_prime.value_or(rank);
  const int d_c = spec.d_c.value_or(rank);
  if (d_ap < 1 || d_c < 1 || d_ap * d_c < rank)
    throw UsageError("need dA'·dC >= rank(rho_AB) = " + std::to_string(rank));
  const auto v = redist::haar_splitting(rank, d_ap, d_c, spec.optimizer.seed);
  const auto four = redist::split_purification(rho, v);
  const auto cp = redist::cost_pair(four);
  const auto swapped = redist::cost_pair(redist::swap_sides(four));
  const double s_a_given_c =
      marginal_entropy(four.pure(), {redist::kA, redist::kC}) - marginal_entropy(four.pure(), {redist::kC});
  const auto fp = fingerprint(state.rho);

  Json doc = header(spec, ts);
  doc["state"] = state_json(state);
  Json entry;
  entry["measure"] = "cost_pair";
  entry["seed"] = spec.optimizer.seed;
  entry["fingerprint"] = fp;
  entry["value"] = round12(cp.q);
  entry["bound"] = "exact";
  entry["tolerance"] = round12(spec.optimizer.tolerance);
  entry["q"] = round12(cp.q);
  entry["e"] = round12(cp.e);
  entry["conditional_entropy_a_given_c"] = round12(s_a_given_c);
  entry["entanglement_balance"] = round12(redist::entanglement_balance(four));
  entry["q_swapped"] = round12(swapped.q);
  entry["e_swapped"] = round12(swapped.e);
  entry["half_mutual_information"] = round12(0.5 * mutual_information(rho, {redist::kA}, {redist::kB}));
  entry["d_a_prime"] = d_ap;
  entry["d_c"] = d_c;
  entry["d_e"] = rank;
  entry["splitting"] = certificate_json(v);
  doc["results"] = Json::array({entry});

  CsvRow row{"0", "cost_pair", cp.q, "exact", spec.optimizer.tolerance, fp, "", "", ""};
  row.extra = "e=" + format12(cp.e) + ";q_swapped=" + format12(swapped.q);
  return finish(spec, std::move(doc), {row}, kExitOk);
}

RunOutput run_verify_command(const RunSpec& spec, const std::string& ts) {
  if (spec.cases < 1) throw UsageError("--cases must be >= 1");
  const auto checks = run_identity_suite(spec.cases, spec.optimizer.seed);
  Json doc = header(spec, ts);
  doc["cases"] = spec.cases;
  doc["threshold"] = kIdentityThreshold;
  Json results = Json::array();
  std::vector<CsvRow> rows;
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.passed;
    results.push_back(Json{{"measure", "identity:" + c.name},
                           {"seed", spec.optimizer.seed},
                           {"fingerprint", "random-suite"},
                           {"value", round12(c.max_deviation)},
                           {"bound", "exact"},
                           {"tolerance", kIdentityThreshold},
                           {"passed", c.passed},
                           {"cases", c.cases}});
    rows.push_back({"0", "identity:" + c.name, c.max_deviation, "exact", kIdentityThreshold, "random-suite", "",
                    c.passed ? "true" : "false", ""});
  }
  doc["passed"] = all;
  doc["results"] = std::move(results);
  return finish(spec, std::move(doc), rows, all ? kExitOk : kExitVerificationFailed);
}

RunOutput run_sweep_command(const RunSpec& spec, const std::string& ts) {
  validate_measures(spec);
  if (!spec.family) throw UsageError("sweep needs --family");
  if (!spec.grid) throw UsageError("sweep needs --grid name=start:stop:step");
  Json doc = header(spec, ts);
  doc["family"] = *spec.family;
  doc["grid"] = Json{{"name", spec.grid->name},
                     {"start", round12(spec.grid->start)},
                     {"stop", round12(spec.grid->stop)},
                     {"step", round12(spec.grid->step)}};
  Json points = Json::array();
  std::vector<CsvRow> rows;
  const auto values = spec.grid->values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    ParamMap params = spec.params;
    params[spec.grid->name] = values[i];
    const auto rho = state_family(*spec.family, params);
    check_cap(rho, spec);
    const auto fp = fingerprint(rho);
    Json point;
    point["index"] = i;
    point["param"] = Json{{spec.grid->name, round12(values[i])}};
    point["fingerprint"] = fp;
    const auto& dims = rho.layout().dims();
    if (dims.size() == 2 && dims[0] == 2 && dims[1] == 2)
      point["wootters_eof"] = round12(measures::wootters_eof(rho));
    Json results = Json::array();
    for (const auto& name : spec.measure_names) {
      const auto r = run_measure(name, rho, spec);
      results.push_back(result_entry(r, spec, fp));
      auto row = csv_row(std::to_string(i), r, fp);
      row.extra = spec.grid->name + "=" + format12(values[i]);
      rows.push_back(std::move(row));
    }
    point["results"] = std::move(results);
    points.push_back(std::move(point));
  }
  doc["results"] = std::move(points);
  return finish(spec, std::move(doc), rows, kExitOk);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " '" + text + "'");
  }
  if (used != text.size()) throw UsageError("cannot parse " + what + " '" + text + "'");
  return v;
}

}  // namespace

std::vector<double> Grid::values() const {
  if (!(step > 0.0) || stop < start) throw UsageError("grid needs step > 0 and stop >= start");
  const auto n = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (n > 100000) throw UsageError("grid has too many points");
  std::vector<double> out;
  for (long long i = 0; i < n; ++i) out.push_back(round12(start + static_cast<double>(i) * step));
  return out;
}

Grid parse_grid(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("grid must look like name=start:stop:step");
  const auto parts = split(text.substr(eq + 1), ':');
  if (parts.size() != 3) throw UsageError("grid must look like name=start:stop:step");
  Grid g{text.substr(0, eq), parse_number(parts[0], "grid start"), parse_number(parts[1], "grid stop"),
         parse_number(parts[2], "grid step")};
  g.values();  // validates
  return g;
}

const std::vector<std::string>& known_measures() {
  static const std::vector<std::string> names{"squashed_upper", "puffed_lower", "eof",          "eof_via_mcs",
                                              "eoa_single",     "eoa_asymptotic", "wootters_eof"};
  return names;
}

RunOutput run(const RunSpec& spec) {
  if (spec.optimizer.restarts < 1) throw UsageError("--restarts must be >= 1");
  try {
    spec.optimizer.validate();
  } catch (const ParamError& e) {
    throw UsageError(e.what());
  }
  const std::string ts = spec.timestamp.value_or(utc_now());
  switch (spec.command) {
    case Command::measure: return run_measure_command(spec, ts);
    case Command::redistribute: return run_redistribute_command(spec, ts);
    case Command::verify: return run_verify_command(spec, ts);
    case Command::sweep: return run_sweep_command(spec, ts);
  }
  throw UsageError("unknown command");
}

namespace {

struct Parsed {
  RunSpec spec;
  bool help = false;
  std::string help_text;
};

Parsed parse(int argc, const char* const* argv) {
  Parsed p;
  RunSpec& spec = p.spec;
  CLI::App app{"Side-information correlation measures for bipartite quantum states", "qside"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string state_path, family, out_path, format = "json", grid, timestamp;
  std::vector<std::string> params, measure_list;
  int d_ap = 0, d_c = 0, k = 0;
  app.add_option("--state", state_path, "State-spec document (JSON)");
  app.add_option("--family", family, "State family: bell, classically_correlated, werner, isotropic, random");
  app.add_option("--param", params, "Family parameter k=v (repeatable)");
  app.add_option("--measure", measure_list, "Measures, comma separated")->delimiter(',');
  app.add_option("--da-prime", d_ap, "Sender side-information dimension dA'");
  app.add_option("--dc", d_c, "Receiver side-information dimension dC");
  app.add_option("--k", k, "Decomposition size (default rank^2)");
  app.add_option("--restarts", spec.optimizer.restarts, "Random restarts per search");
  app.add_option("--max-iterations", spec.optimizer.max_iterations, "Iteration cap per restart");
  app.add_option("--tol", spec.optimizer.tolerance, "Stagnation tolerance");
  app.add_option("--seed", spec.optimizer.seed, "Base seed");
  app.add_option("--out", out_path, "Report path (default stdout)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--dim-cap", spec.dim_cap, "Dimension cap (raising it is unsupported)");
  app.add_option("--cases", spec.cases, "verify: number of random cases");
  app.add_option("--grid", grid, "sweep: name=start:stop:step");
  app.add_option("--timestamp", timestamp, "Fixed report timestamp");

  auto* measure = app.add_subcommand("measure", "Compute measures for one state");
  auto* redistribute = app.add_subcommand("redistribute", "Cost pair for a seeded random splitting");
  auto* verify = app.add_subcommand("verify", "Run the exact identity suite on random states");
  auto* sweep = app.add_subcommand("sweep", "Measures along a family parameter grid");

  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    p.help = true;
    p.help_text = app.help();
    return p;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (measure->parsed()) spec.command = Command::measure;
  if (redistribute->parsed()) spec.command = Command::redistribute;
  if (verify->parsed()) spec.command = Command::verify;
  if (sweep->parsed()) spec.command = Command::sweep;
  if (!state_path.empty()) spec.state_path = state_path;
  if (!family.empty()) spec.family = family;
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects k=v, got '" + kv + "'");
    spec.params[kv.substr(0, eq)] = parse_number(kv.substr(eq + 1), "parameter value");
  }
  spec.measure_names = measure_list;
  if (d_ap) spec.d_a_prime = d_ap;
  if (d_c) spec.d_c = d_c;
  if (k) spec.k = k;
  if (!out_path.empty()) spec.out_path = out_path;
  spec.format = format == "csv" ? Format::csv : Format::json;
  if (!grid.empty()) spec.grid = parse_grid(grid);
  if (!timestamp.empty()) spec.timestamp = timestamp;
  return p;
}

}  // namespace

RunSpec parse_args(int argc, const char* const* argv) {
  auto p = parse(argc, argv);
  if (p.help) throw UsageError(p.help_text);
  return p.spec;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    auto p = parse(argc, argv);
    if (p.help) {
      out << p.help_text;
      return kExitOk;
    }
    const auto result = run(p.spec);
    if (p.spec.out_path) {
      std::ofstream f(*p.spec.out_path, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + *p.spec.out_path + "'");
      f << result.document;
    } else {
      out << result.document;
    }
    if (result.exit_code == kExitVerificationFailed) err << "verification failed\n";
    return result.exit_code;
  } catch (const ValidationError& e) {
    err << "validation error (" << e.invariant() << "): " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace qside::cli
