#include "qside/core/tensor.hpp"

#include "qside/core/errors.hpp"

namespace qside::tensor {

int product(const std::vector<int>& dims) {
  int d = 1;
  for (int x : dims) d *= x;
  return d;
}

Split split_indices(const std::vector<int>& dims, const std::vector<bool>& mask) {
  if (mask.size() != dims.size()) throw LayoutError("mask size does not match subsystem count");
  Split s;
  for (std::size_t i = 0; i < dims.size(); ++i) (mask[i] ? s.dim_in : s.dim_out) *= dims[i];
  const int total = s.dim_in * s.dim_out;
  s.in.assign(total, 0);
  s.out.assign(total, 0);
  std::vector<int> digits(dims.size(), 0);
  for (int idx = 0; idx < total; ++idx) {
    int in = 0;
    int out = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (mask[k])
        in = in * dims[k] + digits[k];
      else
        out = out * dims[k] + digits[k];
    }
    s.in[idx] = in;
    s.out[idx] = out;
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
      if (++digits[k] < dims[k]) break;
      digits[k] = 0;
    }
  }
  return s;
}

Matrix as_bipartite(const Vector& psi, const Split& split) {
  Matrix m(split.dim_in, split.dim_out);
  for (Eigen::Index i = 0; i < psi.size(); ++i) m(split.in[i], split.out[i]) = psi(i);
  return m;
}

Vector from_bipartite(const Matrix& m, const Split& split) {
  Vector psi(split.in.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = m(split.in[i], split.out[i]);
  return psi;
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<bool>& keep) {
  const Split s = split_indices(dims, keep);
  if (rho.rows() != static_cast<Eigen::Index>(s.in.size()) || rho.cols() != rho.rows())
    throw ShapeError("partial_trace: matrix size does not match layout");
  // full index for each (kept, traced) pair
  std::vector<int> full(s.in.size());
  for (std::size_t i = 0; i < s.in.size(); ++i) full[s.in[i] * s.dim_out + s.out[i]] = static_cast<int>(i);
  Matrix out = Matrix::Zero(s.dim_in, s.dim_in);
  for (int t = 0; t < s.dim_out; ++t)
    for (int b = 0; b < s.dim_in; ++b) {
      const int jb = full[b * s.dim_out + t];
      for (int a = 0; a < s.dim_in; ++a) out(a, b) += rho(full[a * s.dim_out + t], jb);
    }
  return out;
}

namespace {

std::vector<int> permutation_map(const std::vector<int>& dims, const std::vector<int>& perm) {
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != n) throw LayoutError("permutation has wrong length");
  std::vector<int> new_dims(n);
  std::vector<bool> used(n, false);
  for (int j = 0; j < n; ++j) {
    if (perm[j] < 0 || perm[j] >= n || used[perm[j]]) throw LayoutError("invalid permutation");
    used[perm[j]] = true;
    new_dims[j] = dims[perm[j]];
  }
  const int total = product(dims);
  std::vector<int> map(total);  // old index -> new index
  std::vector<int> digits(n, 0);
  for (int idx = 0; idx < total; ++idx) {
    int ni = 0;
    for (int j = 0; j < n; ++j) ni = ni * new_dims[j] + digits[perm[j]];
    map[idx] = ni;
    for (int k = n - 1; k >= 0; --k) {
      if (++digits[k] < dims[k]) break;
      digits[k] = 0;
    }
  }
  return map;
}

}  // namespace

Vector permute(const Vector& psi, const std::vector<int>& dims, const std::vector<int>& perm) {
  const auto map = permutation_map(dims, perm);
  Vector out(psi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) out(map[i]) = psi(i);
  return out;
}

Matrix permute(const Matrix& rho, const std::vector<int>& dims, const std::vector<int>& perm) {
  const auto map = permutation_map(dims, perm);
  Matrix out(rho.rows(), rho.cols());
  for (Eigen::Index j = 0; j < rho.cols(); ++j)
    for (Eigen::Index i = 0; i < rho.rows(); ++i) out(map[i], map[j]) = rho(i, j);
  return out;
}

}  // namespace qside::tensor
