#pragma once

#include <Eigen/Core>

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "diracmf/root_system.hpp"

namespace diracmf {

/// Fourier-polynomial loop in the complexified algebra, coefficients in the
/// orthonormal basis; column m of `modes` holds the coefficient of e^{i n t}
/// with n = m - truncation. A g-valued loop satisfies c_{-n} = conj(c_n).
struct FourierLoop {
  int truncation = 0;
  Eigen::MatrixXcd modes;   // dim_g x (2*truncation + 1)

  static FourierLoop zero(int dim_g, int truncation);
  double reality_residual() const;
};

/// Loop whose Cartan-coordinate modes are given in the coroot basis.
FourierLoop cartan_loop(const RootSystem& rs, const Eigen::MatrixXcd& coroot_modes);

Eigen::VectorXcd loop_value(const FourierLoop& loop, double t);

/// x + alpha in the centrally extended loop algebra; x lives in i R.
struct ExtendedLoopVector {
  std::complex<double> central{0, 0};
  FourierLoop loop;
};

/// Path t -> prod_k exp(t mu_k), t in [0, 2 pi]; starts at the identity.
/// Generators are orthonormal-basis coordinate vectors.
struct PathElement {
  std::vector<Eigen::VectorXd> generators;
};

PathElement cartan_path(const RootSystem& rs, const CartanVector& mu);
PathElement compose(const PathElement& first, const PathElement& second);   // pointwise product

/// Adjoint matrix Ad_{gamma(t)} on orthonormal coordinates.
Eigen::MatrixXd path_adjoint(const RootSystem& rs, const PathElement& gamma, double t);

/// Central 1-cocycle of the path action: -(i/2pi) Int <gamma^-1 dgamma | alpha(t)> dt,
/// quadrature with Q periodic nodes. `alpha` may be any pointwise loop, which
/// lets callers bypass Fourier truncation entirely.
std::complex<double> path_cocycle(const RootSystem& rs, const PathElement& gamma,
                                  const std::function<Eigen::VectorXcd(double)>& alpha, int quadrature_order);

struct LoopActionResult {
  ExtendedLoopVector value;
  double truncation_residual = 0;   // RMS defect of the mode-truncated loop part
  bool truncated = false;           // set when the residual exceeds the configured bound
};

/// The path-group action on the extended loop algebra:
///   gamma.(x + alpha) = (x - (i/2pi) Int <gamma^-1 dgamma|alpha>) + Ad_gamma(alpha),
/// loop part re-expanded in modes |n| <= truncation. Requires
/// quadrature_order >= 4*truncation + 8. Truncation loss is reported, never
/// silently dropped.
LoopActionResult loop_action(const RootSystem& rs, const PathElement& gamma,
                             const ExtendedLoopVector& v, int quadrature_order,
                             double residual_bound = 1e-10);

/// Central-extension cocycle (1/2pi) Int <alpha | d beta> in closed Fourier
/// form: sum_n i n <c_{-n}(alpha), c_n(beta)>. Antisymmetric.
std::complex<double> extension_cocycle(const RootSystem& rs, const FourierLoop& alpha,
                                       const FourierLoop& beta);

struct LocalPotentialValue {
  std::complex<double> central{0, 0};     // pi i |mu|^2
  std::optional<Rat> exact_value;         // |mu|^2 / 2 on the rational path
  Eigen::VectorXd lie_part;               // 2 pi mu, coroot coordinates
  double quadrature_residual = 0;
};

/// Local super-potential value at g = exp(2 pi mu): evaluates the trivialising
/// character alpha -> -(i/2pi) Int <mu|alpha> on the logarithm path t -> t mu
/// and returns the central discrepancy. Requires 2 pi mu to be a shortest
/// logarithm; a tie on the cut locus is rejected listing the tied candidates.
LocalPotentialValue local_superpotential(const RootSystem& rs, const RatVec& mu_coroot,
                                         int quadrature_order = 64);
LocalPotentialValue local_superpotential(const RootSystem& rs, const CartanVector& mu,
                                         int quadrature_order = 64);

}  // namespace diracmf
