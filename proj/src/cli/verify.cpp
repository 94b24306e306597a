#include "qside/cli/verify.hpp"

#include "qside/core/entropy.hpp"
#include "qside/core/families.hpp"
#include "qside/core/random.hpp"
#include "qside/mcs/mcs.hpp"
#include "qside/measures/decomposition.hpp"
#include "qside/redistribution/cost_pair.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <map>

namespace qside::cli {

namespace {

class Tally {
 public:
  explicit Tally(std::vector<std::string> names) : order_(std::move(names)) {
    for (const auto& n : order_) worst_[n] = 0.0;
  }
  void record(const std::string& name, double deviation) {
    auto& w = worst_.at(name);
    w = std::max(w, deviation);
  }
  std::vector<IdentityCheck> finish(int cases, double threshold) const {
    std::vector<IdentityCheck> out;
    for (const auto& n : order_) {
      const double d = worst_.at(n);
      out.push_back({n, d, cases, d <= threshold});
    }
    return out;
  }

 private:
  std::vector<std::string> order_;
  std::map<std::string, double> worst_;
};

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

std::vector<IdentityCheck> run_identity_suite(int cases, std::uint64_t seed, double threshold) {
  Tally tally({"mcs_cmi_identity", "mcs_entanglement_zero", "mcs_marginal", "mcs_side_symmetry",
               "swap_invariance", "balance_equivalence", "cmi_bound", "cost_nonnegative",
               "strong_subadditivity", "mutual_information_extreme", "local_unitary_invariance",
               "purification_roundtrip"});
  using namespace redist;
  for (int c = 0; c < cases; ++c) {
    const std::uint64_t base = derive_seed(seed, static_cast<std::uint64_t>(c));
    Rng rng(base);
    const int da = uniform(rng, 2, 3);
    const int db = uniform(rng, 2, 3);
    const int dab = da * db;
    const int rank = uniform(rng, 1, std::min(dab, 36 / dab));
    const auto rho = random_density({da, db}, rank, derive_seed(base, 1));
    const int r = rho.rank();

    // purification round trip
    const auto pure = purify(rho, "E");
    tally.record("purification_roundtrip", max_abs_diff(partial_trace(pure, {"A", "B"}).matrix(), rho.matrix()));

    // random splitting
    const int d_ap = uniform(rng, 1, 4);
    const int d_c = std::max((r + d_ap - 1) / d_ap, uniform(rng, 1, 3));
    const auto v = haar_splitting(r, d_ap, d_c, derive_seed(base, 2));
    const auto state = split_purification(rho, v);
    const auto cp = cost_pair(state);
    const auto swapped = cost_pair(swap_sides(state));
    tally.record("swap_invariance", std::abs(swapped.q - cp.q));
    tally.record("balance_equivalence", std::abs(cp.e - entanglement_balance(state)));
    const double min_s = std::min(marginal_entropy(rho, {"A"}), marginal_entropy(rho, {"B"}));
    tally.record("cmi_bound", std::max(0.0, cp.q - min_s));
    tally.record("cost_nonnegative", std::max(0.0, -cp.q));
    tally.record("purification_roundtrip", max_abs_diff(state.marginal_ab().matrix(), rho.matrix()));

    const double half_mi = 0.5 * mutual_information(rho, {"A"}, {"B"});
    tally.record("mutual_information_extreme",
                 std::abs(cost_pair(split_purification(rho, all_at_sender(r))).q - half_mi));
    tally.record("mutual_information_extreme",
                 std::abs(cost_pair(split_purification(rho, all_at_receiver(r))).q - half_mi));

    const Matrix local = Eigen::kroneckerProduct(haar_unitary(d_ap, derive_seed(base, 3)),
                                                 haar_unitary(d_c, derive_seed(base, 4)))
                             .eval();
    const SplittingIsometry rotated(local * v.matrix(), d_ap, d_c);
    tally.record("local_unitary_invariance", std::abs(cost_pair(split_purification(rho, rotated)).q - cp.q));

    // random decomposition and its MCS
    const int k = r + uniform(rng, 0, 2);
    const auto dec = measures::decomposition_from_isometry(rho, haar_isometry(k, r, derive_seed(base, 5)));
    const auto sides = mcs::mcs_cmi_identity(dec);
    tally.record("mcs_cmi_identity", std::abs(sides.lhs - sides.rhs));
    const auto real = mcs::mcs_from_decomposition(dec);
    tally.record("mcs_entanglement_zero", std::abs(cost_pair(real.state).e));
    tally.record("mcs_marginal",
                 max_abs_diff(real.state.marginal_side_information().matrix(), mcs::mcs_state(real.sigma).matrix()));
    tally.record("mcs_side_symmetry", std::abs(marginal_entropy(real.state.pure(), {kAPrime}) -
                                               marginal_entropy(real.state.pure(), {kC})));

    // strong subadditivity on a random tripartite mixed state
    const int dc3 = uniform(rng, 2, 3);
    const int d3 = dab * dc3;
    const auto tri = random_density({da, db, dc3}, uniform(rng, 1, std::min(d3, 8)), derive_seed(base, 6));
    tally.record("strong_subadditivity",
                 std::max(0.0, -conditional_mutual_information(tri, {"A"}, {"B"}, {"C"})));
  }
  return tally.finish(cases, threshold);
}

}  // namespace qside::cli
