// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. An optional first argument names the qside
// executable; criterion 8 then also checks the real binary end to end.

#include "qside/cli/report.hpp"
#include "qside/cli/run.hpp"
#include "qside/cli/verify.hpp"
#include "qside/core/entropy.hpp"
#include "qside/core/families.hpp"
#include "qside/core/random.hpp"
#include "qside/mcs/mcs.hpp"
#include "qside/measures/measures.hpp"
#include "qside/redistribution/cost_pair.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qside;
using measures::OptimizerConfig;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (failures_.size() < 5) failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome outcome() const {
    Outcome o{pass_, notes_};
    for (const auto& f : failures_) o.detail += "; failed: " + f;
    return o;
  }

 private:
  bool pass_ = true;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string fixed(double x, int digits = 6) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// Entropy of a marginal of a pure four-party state, brute force.
double oracle_entropy(const PureState& psi, std::vector<bool> keep) {
  return oracle::entropy(oracle::partial_trace(psi.density().matrix(), psi.layout().dims(), keep));
}

// 1. Exact identities on at least 200 seeded random states.
Outcome identities() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  std::array<double, 6> worst{};
  const int cases = 200;
  for (int i = 0; i < cases; ++i) {
    const auto base = derive_seed(2024, static_cast<std::uint64_t>(i));
    Rng rng(base);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int da = pick(2, 3), db = pick(2, 3), dab = da * db;
    const int rank = pick(1, std::min(dab, 36 / dab));
    const auto rho = random_density({da, db}, rank, derive_seed(base, 1));
    const int r = rho.rank();

    const int d_ap = pick(1, 3);
    const int d_c = std::max((r + d_ap - 1) / d_ap, pick(1, 3));
    const auto v = redist::haar_splitting(r, d_ap, d_c, derive_seed(base, 2));
    const auto four = redist::split_purification(rho, v);
    const auto& psi = four.pure();
    // Order A, B, A', C.
    const double s_ac = oracle_entropy(psi, {true, false, false, true});
    const double s_bc = oracle_entropy(psi, {false, true, false, true});
    const double s_abc = oracle_entropy(psi, {true, true, false, true});
    const double s_c = oracle_entropy(psi, {false, false, false, true});
    const double s_a = oracle_entropy(psi, {true, false, false, false});
    const double s_b = oracle_entropy(psi, {false, true, false, false});
    const double s_aap = oracle_entropy(psi, {true, false, true, false});
    const double s_ap = oracle_entropy(psi, {false, false, true, false});
    const double q_oracle = 0.5 * (s_ac + s_bc - s_abc - s_c);
    const double e_oracle = 0.5 * (s_a + s_ap - s_aap) - 0.5 * (s_a + s_c - s_ac);

    const auto cp = redist::cost_pair(four);
    const auto swapped = redist::cost_pair(redist::swap_sides(four));
    // Q under A' <-> C, evaluated by the oracle on the swapped marginals.
    const double s_aap_b = oracle_entropy(psi, {true, true, true, false});
    const double q_swapped_oracle = 0.5 * (s_aap + oracle_entropy(psi, {false, true, true, false}) - s_aap_b - s_ap);
    worst[2] = std::max({worst[2], std::abs(swapped.q - cp.q), std::abs(q_swapped_oracle - q_oracle),
                         std::abs(cp.q - q_oracle)});
    worst[3] = std::max({worst[3], std::abs(redist::entanglement_balance(four) - cp.e),
                         std::abs((s_ac - s_c) - q_oracle - e_oracle), std::abs(cp.e - e_oracle)});
    worst[4] = std::max(worst[4], std::max(0.0, q_oracle - std::min(s_a, s_b)));

    const int k = r + pick(0, 2);
    const auto dec = measures::decomposition_from_isometry(rho, haar_isometry(k, r, derive_seed(base, 5)));
    const auto sides = mcs::mcs_cmi_identity(dec);
    double rhs_oracle = 0.0;
    for (const auto& e : dec.entries())
      rhs_oracle += e.p * oracle::entropy(oracle::partial_trace(e.psi.density().matrix(), {da, db}, {true, false}));
    const auto real = mcs::mcs_from_decomposition(dec);
    const auto& m = real.state.pure();
    const double lhs_oracle = 0.5 * (oracle_entropy(m, {true, false, false, true}) +
                                     oracle_entropy(m, {false, true, false, true}) -
                                     oracle_entropy(m, {true, true, false, true}) -
                                     oracle_entropy(m, {false, false, false, true}));
    worst[0] = std::max({worst[0], std::abs(sides.lhs - sides.rhs), std::abs(lhs_oracle - rhs_oracle),
                         std::abs(sides.lhs - lhs_oracle)});
    const double e_mcs_oracle = 0.5 * (oracle_entropy(m, {true, false, false, false}) +
                                       oracle_entropy(m, {false, false, true, false}) -
                                       oracle_entropy(m, {true, false, true, false})) -
                                0.5 * (oracle_entropy(m, {true, false, false, false}) +
                                       oracle_entropy(m, {false, false, false, true}) -
                                       oracle_entropy(m, {true, false, false, true}));
    worst[1] = std::max({worst[1], std::abs(mcs::mcs_cost_pair(dec).e), std::abs(e_mcs_oracle)});

    const int dc3 = pick(2, 3);
    const auto tri = random_density({da, db, dc3}, pick(1, std::min(dab * dc3, 8)), derive_seed(base, 6));
    const std::vector<int> dims{da, db, dc3};
    auto S = [&](std::vector<bool> keep) { return oracle::entropy(oracle::partial_trace(tri.matrix(), dims, keep)); };
    const double ssa = S({true, false, true}) + S({false, true, true}) - S({true, true, true}) - S({false, false, true});
    worst[5] = std::max({worst[5], std::max(0.0, -ssa),
                         std::max(0.0, -conditional_mutual_information(tri, {"A"}, {"B"}, {"C"}))});
  }
  const char* names[] = {"mcs-cmi", "mcs-ebits", "swap", "balance", "cmi-bound", "ssa"};
  for (int i = 0; i < 6; ++i) {
    c.check(worst[i] <= 1e-8, std::string(names[i]) + " deviation " + sci(worst[i]));
    c.note(std::string(names[i]) + " " + sci(worst[i]));
  }
  // The shipped verify command on the same number of cases.
  const auto suite = cli::run_identity_suite(cases, 2024);
  double suite_worst = 0.0;
  for (const auto& chk : suite) {
    c.check(chk.passed, "verify:" + chk.name);
    suite_worst = std::max(suite_worst, chk.max_deviation);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.check(secs <= 120.0, "runtime " + fixed(secs, 1) + " s");
  c.note("verify suite max " + sci(suite_worst) + ", " + std::to_string(cases) + " states, " + fixed(secs, 1) + " s");
  return c.outcome();
}

// 2. Two-qubit formation against the closed form.
Outcome two_qubit_oracle() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  const OptimizerConfig cfg;
  double worst = 0.0, worst_zero = 0.0;
  auto compare = [&](const DensityOperator& rho, const std::string& tag) {
    const double w = measures::wootters_eof(rho);
    const double a = measures::eof(rho, std::nullopt, cfg).value;
    const double b = mcs::eof_via_mcs(rho, std::nullopt, cfg).value;
    worst = std::max({worst, std::abs(a - w), std::abs(b - w)});
    c.check(std::abs(a - w) <= 1e-3, tag + " eof " + fixed(a) + " vs " + fixed(w));
    c.check(std::abs(b - w) <= 1e-3, tag + " eof_via_mcs " + fixed(b) + " vs " + fixed(w));
    return std::max(a, b);
  };
  for (std::uint64_t s = 0; s < 50; ++s) compare(random_density({2, 2}, 1 + static_cast<int>(s % 4), 5000 + s), "random " + std::to_string(s));
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const double v = compare(werner(p), "werner " + fixed(p, 1));
    if (p <= 1.0 / 3.0) {
      worst_zero = std::max(worst_zero, v);
      c.check(v <= 1e-3, "werner " + fixed(p, 1) + " not separable-zero: " + fixed(v));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.check(secs <= 600.0, "runtime " + fixed(secs, 1) + " s");
  c.note("max |Δ| " + sci(worst) + " over 50 random + 11 Werner, max value at p<=1/3 " + sci(worst_zero) + ", " +
         fixed(secs, 1) + " s");
  return c.outcome();
}

struct FiveValues {
  double squashed, eof, eoa_single, eoa_asym, puffed;
};

FiveValues five(const DensityOperator& rho, const OptimizerConfig& cfg) {
  const int r = rho.rank();
  return {measures::squashed_upper(rho, r, r, cfg).value, measures::eof(rho, std::nullopt, cfg).value,
          measures::eoa_single(rho, std::nullopt, cfg).value, measures::eoa_asymptotic(rho),
          measures::puffed_lower(rho, r, r, cfg).value};
}

// 3. Extreme cases.
Outcome extremes() {
  Criterion c;
  const OptimizerConfig cfg;
  const auto bell = five(bell_state(), cfg);
  for (double v : {bell.squashed, bell.eof, bell.eoa_single, bell.eoa_asym, bell.puffed})
    c.check(std::abs(v - 1.0) <= 1e-6, "bell value " + fixed(v, 9));
  c.note("bell all five = 1 within " +
         sci(std::max({std::abs(bell.squashed - 1), std::abs(bell.eof - 1), std::abs(bell.eoa_single - 1),
                       std::abs(bell.eoa_asym - 1), std::abs(bell.puffed - 1)})));

  // Product states. All five vanish when a factor is pure (the assisted and
  // puffed quantities equal min{S(A), S(B)}, which is zero only then).
  double worst_pure_factor = 0.0;
  for (std::uint64_t s = 0; s < 6; ++s) {
    const int da = 2 + static_cast<int>(s % 2);
    const auto mixed = random_density({da}, da, s);
    const auto pure = random_pure({2}, 100 + s).density();
    const auto rho = s % 2 ? fixtures::product(mixed, pure) : fixtures::product(pure, mixed);
    const auto v = five(rho, cfg);
    for (double x : {v.squashed, v.eof, v.eoa_single, v.eoa_asym, v.puffed}) {
      worst_pure_factor = std::max(worst_pure_factor, std::abs(x));
      c.check(std::abs(x) <= 1e-6, "product " + std::to_string(s) + " value " + sci(x));
    }
  }
  double worst_mixed = 0.0;
  for (std::uint64_t s = 0; s < 4; ++s) {
    const auto rho = fixtures::product(random_density({2}, 2, 200 + s), random_density({2}, 2, 300 + s));
    const int r = rho.rank();
    const double sq = measures::squashed_upper(rho, r, r, cfg).value;
    const double ef = measures::eof(rho, std::nullopt, cfg).value;
    worst_mixed = std::max({worst_mixed, std::abs(sq), std::abs(ef)});
    c.check(std::abs(sq) <= 1e-6 && std::abs(ef) <= 1e-6, "mixed product squashed/eof " + sci(sq) + "/" + sci(ef));
  }
  c.note("products with a pure factor: all five within " + sci(worst_pure_factor) +
         "; mixed products: squashed/eof within " + sci(worst_mixed));

  double worst_pure = 0.0;
  for (std::uint64_t s = 0; s < 8; ++s) {
    const int db = 2 + static_cast<int>(s % 2);
    const auto rho = random_pure({2, db}, 400 + s).density();
    const double sa = marginal_entropy(rho, {"A"});
    for (auto [dap, dc] : {std::pair{1, 1}, {2, 2}}) {
      const double sq = measures::squashed_upper(rho, dap, dc, cfg).value;
      const double pl = measures::puffed_lower(rho, dap, dc, cfg).value;
      worst_pure = std::max({worst_pure, std::abs(sq - sa), std::abs(pl - sa)});
      c.check(std::abs(sq - sa) <= 1e-9 && std::abs(pl - sa) <= 1e-9, "pure state " + std::to_string(s));
    }
  }
  c.note("pure states squashed = puffed = S(A) within " + sci(worst_pure));
  return c.outcome();
}

// 4. Separable states.
Outcome separability() {
  Criterion c;
  const OptimizerConfig cfg;
  std::vector<fixtures::Separable> states{fixtures::classical_pair()};
  for (std::uint64_t s = 0; s < 10; ++s) states.push_back(fixtures::random_separable(2 + static_cast<int>(s % 3), 60 + s));
  double worst_cmi = 0.0, worst_sq = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& st = states[i];
    const auto ext = measures::flag_extension(st.rho, st.terms);
    const double cmi = conditional_mutual_information(ext, {"A"}, {"B"}, {"E~"});
    const std::vector<redist::SplittingIsometry> seeds{measures::flag_splitting(st.rho, st.terms)};
    const int r = st.rho.rank();
    const double sq = measures::squashed_upper(st.rho, r, r, cfg, seeds).value;
    worst_cmi = std::max(worst_cmi, cmi);
    worst_sq = std::max(worst_sq, sq);
    c.check(cmi <= 1e-9, "state " + std::to_string(i) + " flag CMI " + sci(cmi));
    c.check(sq <= 1e-6, "state " + std::to_string(i) + " squashed_upper " + sci(sq));
  }
  c.note("11 states, max flag CMI " + sci(worst_cmi) + ", max squashed_upper " + sci(worst_sq));
  return c.outcome();
}

std::vector<std::pair<std::string, DensityOperator>> corpus() {
  std::vector<std::pair<std::string, DensityOperator>> out{{"bell", bell_state()},
                                                           {"classically_correlated", classically_correlated()}};
  for (int i = 0; i <= 10; ++i) out.emplace_back("werner " + fixed(i / 10.0, 1), werner(i / 10.0));
  for (double p : {0.0, 0.3, 0.6, 1.0}) out.emplace_back("isotropic2 " + fixed(p, 1), isotropic(2, p));
  for (double p : {0.2, 0.5}) out.emplace_back("isotropic3 " + fixed(p, 1), isotropic(3, p));
  for (std::uint64_t s = 0; s < 20; ++s)
    out.emplace_back("random2x2 " + std::to_string(s), random_density({2, 2}, 1 + static_cast<int>(s % 4), 7000 + s));
  for (std::uint64_t s = 0; s < 8; ++s)
    out.emplace_back("random2x3 " + std::to_string(s), random_density({2, 3}, 1 + static_cast<int>(s % 4), 7100 + s));
  for (std::uint64_t s = 0; s < 4; ++s)
    out.emplace_back("separable " + std::to_string(s), fixtures::random_separable(3, 7200 + s).rho);
  for (std::uint64_t s = 0; s < 3; ++s)
    out.emplace_back("product " + std::to_string(s),
                     fixtures::product(random_density({2}, 2, 7300 + s), random_density({2}, 2, 7400 + s)));
  return out;
}

// 5. Ordering chain on the corpus.
Outcome ordering() {
  Criterion c;
  OptimizerConfig cfg;
  int n = 0;
  double margin_sq = -1e9, margin_eoa = -1e9, margin_pu = -1e9;
  for (const auto& [name, rho] : corpus()) {
    const int r = rho.rank();
    const auto ef = measures::eof(rho, std::nullopt, cfg).value;
    const auto sq = measures::squashed_upper(rho, r, r, cfg).value;
    const auto es = measures::eoa_single(rho, std::nullopt, cfg).value;
    const auto ea = measures::eoa_asymptotic(rho);
    const auto pu = measures::puffed_lower(rho, r, r, cfg).value;
    margin_sq = std::max(margin_sq, sq - ef);
    margin_eoa = std::max(margin_eoa, es - ea);
    margin_pu = std::max(margin_pu, pu - ea);
    c.check(sq <= ef + 1e-6, name + ": squashed_upper " + fixed(sq, 9) + " > eof " + fixed(ef, 9));
    c.check(es <= ea + 1e-9, name + ": eoa_single " + fixed(es, 12) + " > eoa_asymptotic " + fixed(ea, 12));
    c.check(pu <= ea + 1e-9, name + ": puffed_lower " + fixed(pu, 12) + " > eoa_asymptotic " + fixed(ea, 12));
    ++n;
  }
  c.note(std::to_string(n) + " states; max(sq - eof) " + sci(margin_sq) + ", max(eoa_single - eoa_asym) " +
         sci(margin_eoa) + ", max(puffed - eoa_asym) " + sci(margin_pu));
  return c.outcome();
}

// 6. Splittings with a trivial side.
Outcome degenerate_splittings() {
  Criterion c;
  OptimizerConfig cfg;
  cfg.restarts = 2;
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 30; ++s) {
    const int db = 2 + static_cast<int>(s % 2);
    const auto rho = random_density({2, db}, 1 + static_cast<int>(s % (2 * db)), 8000 + s);
    const int r = rho.rank();
    const double half_mi = 0.5 * mutual_information(rho, {"A"}, {"B"});
    const double dc1 = redist::cost_pair(redist::split_purification(rho, redist::haar_splitting(r, r, 1, s))).q;
    const double dap1 = redist::cost_pair(redist::split_purification(rho, redist::haar_splitting(r, 1, r, s))).q;
    const double dap1_wide =
        redist::cost_pair(redist::split_purification(rho, redist::haar_splitting(r, 1, r + 2, s + 1))).q;
    const double searched = measures::optimize_splitting(rho, 1, r, cfg).value;
    for (double q : {dc1, dap1, dap1_wide, searched}) {
      worst = std::max(worst, std::abs(q - half_mi));
      c.check(std::abs(q - half_mi) <= 1e-9, "seed " + std::to_string(s) + " Q " + fixed(q, 12) + " vs " + fixed(half_mi, 12));
    }
  }
  c.note("30 states, max |Q - I(A:B)/2| " + sci(worst));
  return c.outcome();
}

// 7. Superadditivity witness.
Outcome superadditivity() {
  Criterion c;
  const auto rho1 = fixtures::product(fixtures::qubit_with_entropy(0.5, "A"), fixtures::maximally_mixed_qubit("B"));
  const auto rho2 = fixtures::product(fixtures::maximally_mixed_qubit("A"), fixtures::qubit_with_entropy(0.5, "B"));
  const double gap = measures::puffed_superadditivity_gap(rho1, rho2);
  c.check(measures::puffed_superadditivity_witness(rho1, rho2), "opposite-side pair not flagged");
  c.check(std::abs(gap - 0.5) <= 1e-12, "gap " + fixed(gap, 15));
  c.check(!measures::puffed_superadditivity_witness(bell_state(), bell_state()), "bell pair flagged");
  c.note("opposite-side gap " + fixed(gap, 12) + ", bell pair gap " +
         fixed(measures::puffed_superadditivity_gap(bell_state(), bell_state()), 12));
  return c.outcome();
}

std::string strip_timestamp(const std::string& s) {
  static const std::regex json_ts("\"timestamp\": \"[^\"]*\"");
  static const std::regex csv_ts("timestamp=[^\\n]*");
  return std::regex_replace(std::regex_replace(s, json_ts, "\"timestamp\": \"\""), csv_ts, "timestamp=");
}

std::string in_process(const std::vector<std::string>& args, int& code) {
  std::vector<std::string> full{"qside"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

std::string external(const std::string& exe, const std::vector<std::string>& args, int& code) {
  std::string cmd = "'" + exe + "'";
  for (const auto& a : args) cmd += " '" + a + "'";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  if (!pipe) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  code = pclose(pipe.release());
  return out;
}

// 8. Determinism and restart monotonicity.
Outcome determinism(const std::string& exe) {
  Criterion c;
  const std::vector<std::vector<std::string>> runs{
      {"measure", "--family", "random", "--param", "da=2", "--param", "db=2", "--param", "rank=3", "--param", "seed=5",
       "--measure", "squashed_upper,puffed_lower,eof,eof_via_mcs,eoa_single,eoa_asymptotic,wootters_eof", "--seed", "11"},
      {"measure", "--family", "isotropic", "--param", "d=3", "--param", "p=0.4", "--measure", "eof,eoa_single",
       "--restarts", "2", "--format", "csv"},
      {"redistribute", "--family", "werner", "--param", "p=0.6", "--da-prime", "2", "--dc", "3", "--seed", "4"},
      {"verify", "--cases", "50", "--seed", "8"},
      {"sweep", "--family", "werner", "--grid", "p=0:1:0.25", "--measure", "eof,squashed_upper", "--restarts", "2"}};
  int compared = 0;
  for (const auto& args : runs) {
    int c1 = 0, c2 = 0;
    const auto a = in_process(args, c1);
    const auto b = in_process(args, c2);
    c.check(c1 == 0 && c2 == 0, args[0] + " exit codes " + std::to_string(c1) + "/" + std::to_string(c2));
    c.check(!a.empty() && strip_timestamp(a) == strip_timestamp(b), args[0] + " in-process reports differ");
    ++compared;
    if (!exe.empty()) {
      int e1 = 0, e2 = 0;
      const auto x = external(exe, args, e1);
      const auto y = external(exe, args, e2);
      c.check(e1 == 0 && e2 == 0, args[0] + " binary exit codes");
      c.check(!x.empty() && strip_timestamp(x) == strip_timestamp(y), args[0] + " binary reports differ");
      c.check(strip_timestamp(x) == strip_timestamp(a), args[0] + " binary and library reports differ");
      ++compared;
    }
  }

  // Values move monotonically with --restarts at a fixed seed.
  const auto rho = random_density({2, 2}, 3, 9100);
  OptimizerConfig cfg;
  cfg.seed = 21;
  std::array<double, 5> last{1e9, 1e9, 1e9, -1e9, -1e9};
  int steps = 0;
  for (int restarts = 1; restarts <= 6; ++restarts) {
    cfg.restarts = restarts;
    const std::array<double, 5> now{measures::squashed_upper(rho, 3, 3, cfg).value,
                                    measures::eof(rho, std::nullopt, cfg).value,
                                    mcs::eof_via_mcs(rho, std::nullopt, cfg).value,
                                    measures::eoa_single(rho, std::nullopt, cfg).value,
                                    measures::puffed_lower(rho, 3, 3, cfg).value};
    for (int i = 0; i < 3; ++i) c.check(now[i] <= last[i], "minimizer " + std::to_string(i) + " increased at restarts=" + std::to_string(restarts));
    for (int i = 3; i < 5; ++i) c.check(now[i] >= last[i], "maximizer " + std::to_string(i) + " decreased at restarts=" + std::to_string(restarts));
    last = now;
    ++steps;
  }
  c.note(std::to_string(compared) + " report pairs identical modulo timestamp" +
         std::string(exe.empty() ? " (library only)" : " (library and binary)") + ", restarts 1.." +
         std::to_string(steps) + " monotone");
  return c.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  struct Entry {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries{
      {1, "exact identity suite", identities},
      {2, "two-qubit formation vs closed form", two_qubit_oracle},
      {3, "extreme-case values", extremes},
      {4, "separable states", separability},
      {5, "ordering chain", ordering},
      {6, "trivial-side splittings", degenerate_splittings},
      {7, "superadditivity witness", superadditivity},
      {8, "determinism", [&] { return determinism(exe); }},
  };
  int failed = 0;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("criterion %d %s: %s (%.1f s) %s\n", e.id, e.title, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failed, entries.size());
  return failed == 0 ? 0 : 1;
}
