#pragma once

// Internal machinery: explicit highest-weight modules over the Chevalley
// generators and their expression in the orthonormal compact basis.
// Not installed; rep.cpp and root_system.cpp share it.

#include <Eigen/Core>

#include <map>
#include <vector>

#include "diracmf/root_system.hpp"

namespace diracmf::detail {

struct VecLess {
  bool operator()(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
    for (int i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

using WeightMap = std::map<Eigen::VectorXi, long long, VecLess>;

/// Weight multiplicities of V(lambda) by the Freudenthal recursion, exact.
WeightMap freudenthal_multiplicities(const RootSystem& rs, const Eigen::VectorXi& lambda);

/// Explicit module in an orthonormal weight basis (contravariant form),
/// with real lowering matrices and raising = transpose.
struct HighestWeightModule {
  int dim = 0;
  std::vector<Eigen::VectorXi> weight_of_basis;   // ordered by level, then lex
  std::vector<Eigen::MatrixXd> lowering;          // F_i, one per simple root
};

HighestWeightModule build_module(const RootSystem& rs, const Eigen::VectorXi& lambda);

/// Action matrices of the orthonormal compact basis xi_a on a module,
/// ordered as documented on RootSystem. `root_scale` must already be set on
/// rs except when `compute_scales` is true (boot-strapping pass used while
/// the root system itself is under construction, scales are written back into
/// `scales_out`).
std::vector<Eigen::MatrixXcd> compact_basis_action(const RootSystem& rs,
                                                   const HighestWeightModule& mod,
                                                   const Eigen::VectorXi& lambda,
                                                   bool compute_scales = false,
                                                   std::vector<double>* scales_out = nullptr);

/// Dynkin index of V(lambda) w.r.t. the basic form: dim V * <l, l+2r> / (2 dim g).
Rat dynkin_index(const RootSystem& rs, const Eigen::VectorXi& lambda);

}  // namespace diracmf::detail
