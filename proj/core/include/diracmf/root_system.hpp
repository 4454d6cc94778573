#pragma once

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "diracmf/rational.hpp"

namespace diracmf {

enum class Series { A, B, G, Torus };

/// Group identifier: one of A1, A2, A3, B2, G2 (simply connected simple) or
/// T1..T4 (torus of that rank).
struct GroupTag {
  Series series = Series::Torus;
  int rank = 0;

  bool operator==(const GroupTag&) const = default;
  std::string str() const;

  /// Parses "A2", "B2", "G2", "T3" or "torus(3)". Throws std::invalid_argument
  /// ("unsupported group: ...") for anything else.
  static GroupTag parse(std::string_view s);
};

/// Integer vector in the fundamental-weight basis of the owning group
/// (character lattice for a torus).
struct WeightVector {
  GroupTag tag;
  Eigen::VectorXi coords;

  bool dominant() const { return (coords.array() >= 0).all(); }
};

/// Real point of the Cartan subalgebra in the coroot basis (lattice basis of
/// Pi for a torus). Conjugation invariance makes this slice sufficient for
/// every Dirac-family evaluation.
struct CartanVector {
  GroupTag tag;
  Eigen::VectorXd coords;
};

/// Root datum plus the orthonormal compact basis of the Lie algebra.
///
/// Conventions fixed here once and used by every other module:
///  * basic inner product normalised so the highest root has squared length 2;
///  * cartan(i,j) = <alpha_i, alpha_j^vee>, simple roots are rows of cartan
///    in the fundamental-weight basis;
///  * orthonormal basis ordering: r Cartan directions u_1..u_r, then for each
///    positive root (in stored order) the pair built from E_alpha -/+ F_alpha;
///  * f(a,b,c) are the structure constants of that basis, [xi_a, xi_b] =
///    sum_c f_abc xi_c, totally antisymmetric by construction.
struct RootSystem {
  GroupTag tag;
  int rank = 0;

  Eigen::MatrixXi cartan;                               // empty for tori
  std::vector<Eigen::VectorXi> positive_roots;          // fundamental-weight coords
  std::vector<int> root_height;
  std::vector<std::array<int, 2>> root_decomposition;   // {simple i, root index of alpha - alpha_i}; {-1,-1} if simple
  std::vector<Rat> symmetrizer;                         // d_i = |alpha_i|^2 / 2
  RatMat gram_weights;                                  // <omega_i, omega_j>
  RatMat gram_coroots;                                  // <alpha_i^vee, alpha_j^vee>; user Gram for a torus
  Eigen::VectorXi rho;
  int dual_coxeter = 0;
  int dim_g = 0;

  Eigen::MatrixXd cartan_orth;       // u_j = sum_k cartan_orth(j,k) * (i H_k)
  std::vector<double> root_scale;    // normaliser c_alpha per positive root
  std::vector<double> f;             // dense dim_g^3 structure constants

  bool is_torus() const { return tag.series == Series::Torus; }
  bool is_simple() const { return !is_torus(); }

  double fval(int a, int b, int c) const {
    return f[(static_cast<size_t>(a) * dim_g + b) * dim_g + c];
  }

  /// Index of the highest root in positive_roots (simple groups only).
  int highest_root_index() const;
};

RootSystem build_root_system(GroupTag tag);
RootSystem build_root_system(std::string_view tag);

/// Torus with a caller-supplied positive-definite Gram matrix on the
/// cocharacter lattice. build_root_system("T r") defaults to the identity.
RootSystem build_torus(int rank, RatMat gram);

/// Basic inner product on the weight lattice; exact.
Rat basic_form(const RootSystem& rs, const WeightVector& a, const WeightVector& b);
/// Basic inner product on the Cartan algebra (coroot coordinates).
double basic_form(const RootSystem& rs, const CartanVector& a, const CartanVector& b);
/// Exact variant of the Cartan-side form for rational coordinates.
Rat basic_form_exact(const RootSystem& rs, const RatVec& a, const RatVec& b);

inline double norm_sq(const RootSystem& rs, const CartanVector& v) { return basic_form(rs, v, v); }
Rat norm_sq(const RootSystem& rs, const WeightVector& v);

/// Canonical pairing <nu, mu> of a weight with a Cartan point. Metric-free.
double weight_pairing(const WeightVector& nu, const CartanVector& mu);

/// s_i acting on the weight lattice: nu - nu_i * alpha_i.
Eigen::VectorXi simple_reflection(const RootSystem& rs, int i, const Eigen::VectorXi& weight);
/// s_i acting on coroot coordinates of the Cartan algebra.
RatVec simple_reflection_cartan(const RootSystem& rs, int i, const RatVec& coords);
Eigen::VectorXd simple_reflection_cartan(const RootSystem& rs, int i, const Eigen::VectorXd& coords);

struct WeylData {
  std::vector<Eigen::VectorXi> orbit;   // sorted lexicographically
  long long dimension = 0;              // Weyl dimension of V(dominant representative)
  Eigen::VectorXi dominant;
};

/// Orbit, dominant representative and Weyl dimension formula value.
/// Throws for tori ("no Weyl group").
WeylData weyl_data(const RootSystem& rs, const WeightVector& lambda);

long long weyl_dimension(const RootSystem& rs, const WeightVector& lambda);
long long weyl_order(const RootSystem& rs);

/// All dominant weights with Weyl dimension <= max_dim, sorted by dimension
/// then lexicographically. Uses the coordinate-wise monotonicity of the
/// dimension formula.
std::vector<WeightVector> dominant_weights_up_to_dim(const RootSystem& rs, long long max_dim);

/// Coordinates of a Cartan point in the orthonormal basis u_1..u_r.
Eigen::VectorXd embed_cartan(const RootSystem& rs, const CartanVector& mu);

/// Dump with keys {tag, cartan_matrix, gram, rho, dual_coxeter}; rationals
/// rendered as "p/q" strings.
nlohmann::ordered_json root_system_json(const RootSystem& rs);

namespace detail {
/// Max-norm residuals of total antisymmetry and of the Jacobi identity of f.
double structure_constant_antisymmetry_residual(const RootSystem& rs);
double structure_constant_jacobi_residual(const RootSystem& rs);
}  // namespace detail

}  // namespace diracmf
