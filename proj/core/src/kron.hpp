#pragma once

// Kronecker-product assembly helpers. kron_sum computes sum_k A_k (x) B_k as
// one (N^2 x K) * (K x s^2) product followed by a block scatter, which keeps
// Dirac-square assembly at BLAS speed instead of K full-size kron writes.

#include <Eigen/Core>

#include <vector>

namespace diracmf::detail {

using RowMajorXcd = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

inline Eigen::MatrixXcd kron_sum(const std::vector<Eigen::MatrixXcd>& a,
                                 const std::vector<Eigen::MatrixXcd>& b) {
  const int k = static_cast<int>(a.size());
  const int n = static_cast<int>(a[0].rows());
  const int s = static_cast<int>(b[0].rows());

  Eigen::MatrixXcd q(n * n, k);
  for (int t = 0; t < k; ++t)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) q(i * n + j, t) = a[t](i, j);

  RowMajorXcd p(k, s * s);
  for (int t = 0; t < k; ++t)
    for (int u = 0; u < s; ++u)
      for (int v = 0; v < s; ++v) p(t, u * s + v) = b[t](u, v);

  const RowMajorXcd m = q * p;   // (i*n+j, u*s+v) -> coefficient of block (i,j)

  Eigen::MatrixXcd out(n * s, n * s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Eigen::Map<const RowMajorXcd> block(m.row(i * n + j).data(), s, s);
      out.block(i * s, j * s, s, s) = block;
    }
  return out;
}

}  // namespace diracmf::detail
