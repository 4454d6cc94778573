#pragma once

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include <complex>
#include <vector>

#include "diracmf/rep.hpp"
#include "diracmf/root_system.hpp"

namespace diracmf {

/// One sheet of the torus super-potential W(mu) = -<lambda|mu> + B(mu,mu)/2:
/// a character-lattice label lambda and an even positive-definite integral
/// form B on the cocharacter lattice.
struct PotentialSheet {
  int rank = 0;
  std::vector<long long> lambda;
  RatMat form;
};

/// Validates symmetry, positive definiteness, integrality and evenness of the
/// diagonal (which gives evenness of B(p,p) on the whole lattice).
PotentialSheet make_sheet(std::vector<long long> lambda, RatMat form);

Rat torus_sheet_potential(const PotentialSheet& sheet, const RatVec& mu);
double torus_sheet_potential(const PotentialSheet& sheet, const Eigen::VectorXd& mu);

/// Gradient -lambda + B mu, exact.
RatVec sheet_gradient(const PotentialSheet& sheet, const RatVec& mu);
/// The single critical point: the B-dual of lambda.
RatVec sheet_critical_point(const PotentialSheet& sheet);
/// W at the critical point: -B(l#, l#)/2.
Rat sheet_critical_value(const PotentialSheet& sheet);

/// W on sheet (lambda + B p) at (mu + p), minus W on sheet lambda at mu.
/// Always an exact integer, independent of mu; throws if it is not.
long long translation_descent_check(const PotentialSheet& sheet, const std::vector<long long>& p,
                                    const RatVec& mu);

/// The delta-derivative potential realised on an irrep:
/// -i T(mu) + |mu|^2/2 Id. Hermitian.
Eigen::MatrixXcd lie_potential_operator(const IrrepMatrices& rep, const CartanVector& mu);
/// Same formula on any module given its mu-action matrix.
Eigen::MatrixXcd lie_potential_on_module(const Eigen::MatrixXcd& action, double mu_norm_sq);

struct VerlindePoint {
  RatVec coords;       // cocharacter coordinates in [0,1)^r
  bool regular = true; // trivial Weyl stabiliser (simple groups)
  int orbit = -1;
};

struct VerlindeData {
  std::string tag;     // group tag, or "T<r>" for a bare form
  int rank = 0;
  int level = 0;       // 0 for bare torus data
  RatMat form;         // the isogeny form on the cocharacter lattice
  long long det = 0;
  std::vector<VerlindePoint> points;               // sorted lexicographically
  std::vector<int> representatives;                // indices of orbit representatives (regular orbits)
  std::vector<Rat> critical_values;                // -B(mu,mu)/2 per representative
  std::vector<std::complex<double>> phases;        // exp(2 pi i W)
  std::vector<std::complex<double>> phases_vacuum; // normalised so the vacuum representative is 1
  int vacuum = -1;                                 // index into representatives
};

/// Kernel of the isogeny T -> T* defined by an even integral form: all mu
/// with B(mu, p) integral for the whole lattice, mod the lattice. Enumerated
/// through the Smith normal form; count equals det(B) exactly.
VerlindeData verlinde_kernel_points(int rank, const RatMat& form);

/// Level-k Verlinde data for a simply connected simple group: kernel points
/// of (k + h_vee) times the basic form on the coroot lattice, with regular
/// points grouped into Weyl orbits and ribbon phases per representative.
VerlindeData verlinde_classes_simple(const RootSystem& rs, int level);

/// Fills critical values and ribbon phases exp(2 pi i W_crit) for the
/// representatives (both raw and vacuum-normalised).
void compute_ribbon_phases(VerlindeData& vd);

nlohmann::ordered_json verlinde_json(const VerlindeData& vd);

using LatticeMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

struct SmithNormalForm {
  LatticeMat u, d, v;   // u * g * v = d, u and v unimodular, d diagonal
};
SmithNormalForm smith_normal_form(LatticeMat g);

}  // namespace diracmf
