#include "qside/core/entropy.hpp"

#include "qside/core/errors.hpp"
#include "qside/core/tensor.hpp"

#include <cmath>
#include <string>

namespace qside {

double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues) {
    if (l < -kEigenClip)
      throw PositivityError("eigenvalue " + std::to_string(l) + " below -1e-10");
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

double entropy_bits(const Matrix& hermitian) {
  if (hermitian.rows() == 1) return entropy_of_spectrum(Eigen::VectorXd::Constant(1, hermitian(0, 0).real()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return entropy_of_spectrum(es.eigenvalues());
}

EntropyValue von_neumann_entropy(const DensityOperator& rho) {
  return {entropy_bits(rho.matrix())};
}

double marginal_entropy(const DensityOperator& rho, const std::vector<std::string>& part) {
  if (part.size() == rho.layout().size()) {
    rho.layout().mask(part);  // validates the labels
    return entropy_bits(rho.matrix());
  }
  return entropy_bits(partial_trace(rho, part).matrix());
}

double marginal_entropy(const PureState& psi, const std::vector<std::string>& part) {
  const auto mask = psi.layout().mask(part);
  const auto split = tensor::split_indices(psi.layout().dims(), mask);
  if (split.dim_in == 1 || split.dim_out == 1) return 0.0;
  const Matrix m = tensor::as_bipartite(psi.vector(), split);
  // both sides share the nonzero spectrum; diagonalize the smaller one
  return split.dim_in <= split.dim_out ? entropy_bits(m * m.adjoint())
                                       : entropy_bits(m.adjoint() * m);
}

namespace {

std::vector<std::string> join(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void require_partition(const SystemLayout& layout, const std::vector<std::vector<std::string>>& parts,
                       bool must_cover = true) {
  std::vector<bool> covered(layout.size(), false);
  for (const auto& part : parts) {
    if (part.empty()) throw LayoutError("empty part in partition");
    for (const auto& l : part) {
      const auto i = layout.index_of(l);
      if (covered[i]) throw LayoutError("label '" + l + "' appears in two parts");
      covered[i] = true;
    }
  }
  if (!must_cover) return;
  for (std::size_t i = 0; i < covered.size(); ++i)
    if (!covered[i]) throw LayoutError("label '" + layout[i].label + "' not covered by partition");
}

template <typename State>
double cmi_impl(const State& s, const std::vector<std::string>& a, const std::vector<std::string>& b,
                const std::vector<std::string>& c, bool must_cover) {
  require_partition(s.layout(), {a, b, c}, must_cover);
  const auto ac = join(a, c);
  const auto bc = join(b, c);
  const auto abc = join(join(a, b), c);
  return marginal_entropy(s, ac) + marginal_entropy(s, bc) - marginal_entropy(s, abc) -
         marginal_entropy(s, c);
}

}  // namespace

double mutual_information(const DensityOperator& rho, const std::vector<std::string>& part_a,
                          const std::vector<std::string>& part_b) {
  require_partition(rho.layout(), {part_a, part_b});
  return marginal_entropy(rho, part_a) + marginal_entropy(rho, part_b) -
         entropy_bits(rho.matrix());
}

double conditional_mutual_information(const DensityOperator& rho,
                                      const std::vector<std::string>& part_a,
                                      const std::vector<std::string>& part_b,
                                      const std::vector<std::string>& part_c) {
  return cmi_impl(rho, part_a, part_b, part_c, true);
}

double conditional_mutual_information(const PureState& psi,
                                      const std::vector<std::string>& part_a,
                                      const std::vector<std::string>& part_b,
                                      const std::vector<std::string>& part_c) {
  return cmi_impl(psi, part_a, part_b, part_c, false);
}

double conditional_entropy(const DensityOperator& rho, const std::vector<std::string>& part_a,
                           const std::vector<std::string>& part_c) {
  return marginal_entropy(rho, join(part_a, part_c)) - marginal_entropy(rho, part_c);
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace qside
