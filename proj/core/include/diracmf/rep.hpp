#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diracmf/root_system.hpp"

namespace diracmf {

/// Explicit anti-hermitian action matrices of the orthonormal compact basis
/// on the irreducible module of highest weight lambda. Basis vectors are
/// ordered by weight (level, then lexicographic tie-break).
struct IrrepMatrices {
  RootSystem rs;
  WeightVector lambda;
  int dim = 0;
  std::vector<Eigen::VectorXi> weight_of_basis;
  std::vector<Eigen::MatrixXcd> action;   // one matrix per basis element xi_a
};

/// Builds the module by lowering from the highest weight vector and
/// orthonormalising each weight space in the contravariant form.
/// Throws for non-dominant lambda or when the Weyl dimension exceeds dim_cap.
IrrepMatrices irrep_matrices(const RootSystem& rs, const WeightVector& lambda, int dim_cap = 200);

struct WeightCoordsLess {
  bool operator()(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
    for (int i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};
using WeightMultiplicities = std::map<Eigen::VectorXi, long long, WeightCoordsLess>;

/// Freudenthal recursion, exact rational arithmetic.
WeightMultiplicities weight_multiplicities(const RootSystem& rs, const WeightVector& lambda);

/// T(mu) = sum_a mu^a T(xi_a) restricted to the Cartan; anti-hermitian with
/// eigenvalues i <nu, mu> over the weights nu of the module.
Eigen::MatrixXcd cartan_action(const IrrepMatrices& rep, const CartanVector& mu);

/// Residuals of the defining invariants, all of which unit tests pin:
/// anti-hermiticity, bracket vs structure constants, Casimir scalarity.
struct IrrepResiduals {
  double anti_hermitian = 0;
  double bracket = 0;
  double casimir = 0;
};
IrrepResiduals irrep_residuals(const IrrepMatrices& rep);

/// On-disk cache of constructed matrices (binary little-endian float64 with a
/// JSON header). Purely an optimisation: results are bit-identical with the
/// cache disabled. Directory resolution order: explicit set_irrep_cache_dir,
/// then the DIRACMF_CACHE_DIR environment variable, else disabled.
void set_irrep_cache_dir(std::optional<std::string> dir);
std::optional<std::string> irrep_cache_dir();

}  // namespace diracmf
