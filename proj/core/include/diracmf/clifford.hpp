#pragma once

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include <vector>

#include "diracmf/root_system.hpp"

namespace diracmf {

/// Irreducible Z/2-graded module of Cliff(g, basic form) with explicit
/// generators psi_a = psi(xi_a) satisfying psi_a psi_b + psi_b psi_a =
/// 2 kappa delta_ab. Generators are iterated tensor products of 2x2 blocks in
/// a fixed order, so all relations hold exactly in floating point.
struct SpinorModule {
  RootSystem rs;
  int n = 0;               // dim g
  int dim = 0;             // 2^(n/2)
  int kappa = 1;           // sign in the Clifford relation
  std::vector<Eigen::MatrixXcd> psi;
  Eigen::MatrixXcd chirality;   // 0x0 when n is odd
  bool graded() const { return chirality.size() != 0; }
};

/// Throws when dim g > 14 ("dimension too large").
SpinorModule spinor_module(const RootSystem& rs, int kappa_sign);

/// psi(mu) for a Cartan point; squares to kappa |mu|^2.
Eigen::MatrixXcd clifford_vector(const SpinorModule& sm, const CartanVector& mu);

/// psi of an arbitrary algebra vector given in orthonormal-basis coordinates.
Eigen::MatrixXcd clifford_element(const SpinorModule& sm, const Eigen::VectorXd& on_coords);

/// Generator matrices as JSON (on request; not part of any report schema).
nlohmann::ordered_json spinor_json(const SpinorModule& sm);

}  // namespace diracmf
