#include "diracmf/clifford.hpp"

#include <complex>
#include <stdexcept>

namespace diracmf {
namespace {

using Cplx = std::complex<double>;

Eigen::Matrix2cd pauli(int which) {
  Eigen::Matrix2cd m;
  switch (which) {
    case 0: m << 0, 1, 1, 0; break;                          // sigma_x
    case 1: m << 0, Cplx(0, -1), Cplx(0, 1), 0; break;       // sigma_y
    default: m << 1, 0, 0, -1; break;                        // sigma_z
  }
  return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

// Hermitian Euclidean generator e_k on (C^2)^{tensor m}:
//   e_{2j}   = sz^{j} (x) sx (x) 1...    e_{2j+1} = sz^{j} (x) sy (x) 1...
// and for odd n the last generator is sz^{tensor m}.
Eigen::MatrixXcd euclidean_generator(int k, int n) {
  const int m = n / 2;
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(1, 1);
  if (k == 2 * m) {   // odd n tail
    for (int j = 0; j < m; ++j) g = kron(g, pauli(2));
    return g;
  }
  const int slot = k / 2;
  for (int j = 0; j < slot; ++j) g = kron(g, pauli(2));
  g = kron(g, pauli(k % 2));
  for (int j = slot + 1; j < m; ++j) g = kron(g, Eigen::MatrixXcd::Identity(2, 2));
  return g;
}

}  // namespace

SpinorModule spinor_module(const RootSystem& rs, int kappa_sign) {
  if (kappa_sign != 1 && kappa_sign != -1)
    throw std::invalid_argument("kappa must be +1 or -1");
  if (rs.dim_g > 14)
    throw std::invalid_argument("dimension too large for spinor module: dim g = " +
                                std::to_string(rs.dim_g) + " > 14");
  SpinorModule sm;
  sm.rs = rs;
  sm.n = rs.dim_g;
  sm.kappa = kappa_sign;
  sm.dim = 1 << (sm.n / 2);
  const Cplx scale = kappa_sign == 1 ? Cplx(1, 0) : Cplx(0, 1);
  for (int k = 0; k < sm.n; ++k) sm.psi.push_back(scale * euclidean_generator(k, sm.n));

  if (sm.n % 2 == 0 && sm.n > 0) {
    Eigen::MatrixXcd vol = Eigen::MatrixXcd::Identity(sm.dim, sm.dim);
    for (const auto& p : sm.psi) vol = vol * p;
    // vol^2 = s * Id with s = +-1; divide by its square root to grade.
    const Cplx s = (vol * vol)(0, 0);
    sm.chirality = (s.real() > 0 ? vol : Cplx(0, -1) * vol);
  }
  return sm;
}

Eigen::MatrixXcd clifford_element(const SpinorModule& sm, const Eigen::VectorXd& on_coords) {
  if (on_coords.size() != sm.n)
    throw std::invalid_argument("clifford_element: coordinate size mismatch");
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(sm.dim, sm.dim);
  for (int k = 0; k < sm.n; ++k)
    if (on_coords[k] != 0.0) r += on_coords[k] * sm.psi[k];
  return r;
}

Eigen::MatrixXcd clifford_vector(const SpinorModule& sm, const CartanVector& mu) {
  if (!(sm.rs.tag == mu.tag))
    throw std::invalid_argument("mismatched root systems in clifford_vector");
  const Eigen::VectorXd a = embed_cartan(sm.rs, mu);
  Eigen::VectorXd full = Eigen::VectorXd::Zero(sm.n);
  full.head(sm.rs.rank) = a;
  return clifford_element(sm, full);
}

nlohmann::ordered_json spinor_json(const SpinorModule& sm) {
  nlohmann::ordered_json j;
  j["tag"] = sm.rs.tag.str();
  j["n"] = sm.n;
  j["dim"] = sm.dim;
  j["kappa"] = sm.kappa;
  auto dump = [](const Eigen::MatrixXcd& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int k = 0; k < m.cols(); ++k)
        row.push_back({{"re", m(i, k).real()}, {"im", m(i, k).imag()}});
      rows.push_back(row);
    }
    return rows;
  };
  j["generators"] = nlohmann::ordered_json::array();
  for (const auto& p : sm.psi) j["generators"].push_back(dump(p));
  if (sm.graded()) j["chirality"] = dump(sm.chirality);
  return j;
}

}  // namespace diracmf
