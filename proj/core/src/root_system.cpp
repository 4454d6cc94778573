#include "diracmf/root_system.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <stdexcept>

#include "chevalley.hpp"

namespace diracmf {
namespace {

void check_same(const GroupTag& a, const GroupTag& b, const char* what) {
  if (!(a == b))
    throw std::invalid_argument(std::string("mismatched root systems in ") + what + ": " +
                                a.str() + " vs " + b.str());
}

struct SeriesData {
  Eigen::MatrixXi cartan;
  std::vector<Rat> d;   // |alpha_i|^2 / 2, long roots normalised to 1
};

SeriesData series_data(GroupTag tag) {
  SeriesData s;
  const int r = tag.rank;
  switch (tag.series) {
    case Series::A: {
      s.cartan = Eigen::MatrixXi::Zero(r, r);
      for (int i = 0; i < r; ++i) {
        s.cartan(i, i) = 2;
        if (i + 1 < r) {
          s.cartan(i, i + 1) = -1;
          s.cartan(i + 1, i) = -1;
        }
      }
      s.d.assign(r, Rat(1));
      break;
    }
    case Series::B: {
      // alpha_1 long, alpha_2 short
      s.cartan = Eigen::MatrixXi(2, 2);
      s.cartan << 2, -2, -1, 2;
      s.d = {Rat(1), Rat(1, 2)};
      break;
    }
    case Series::G: {
      // alpha_1 short, alpha_2 long
      s.cartan = Eigen::MatrixXi(2, 2);
      s.cartan << 2, -1, -3, 2;
      s.d = {Rat(1, 3), Rat(1)};
      break;
    }
    case Series::Torus:
      throw std::logic_error("series_data called for torus");
  }
  return s;
}

// Gram-Schmidt rows for the metric given by `gram`.
Eigen::MatrixXd orthonormal_rows(const RatMat& gram) {
  const int r = gram.rows();
  Eigen::MatrixXd m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = to_double(gram(i, j));
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(r, r);
  for (int j = 0; j < r; ++j) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(r, j);
    for (int k = 0; k < j; ++k) {
      const double proj = u.row(k) * m * v;
      v -= proj * u.row(k).transpose();
    }
    const double nrm = std::sqrt(v.transpose() * m * v);
    u.row(j) = v.transpose() / nrm;
  }
  return u;
}

void build_positive_roots(RootSystem& rs) {
  const int r = rs.rank;
  std::map<Eigen::VectorXi, int, detail::VecLess> index;
  for (int i = 0; i < r; ++i) {
    rs.positive_roots.push_back(rs.cartan.row(i).transpose());
    rs.root_height.push_back(1);
    rs.root_decomposition.push_back({i, -1});
    index.emplace(rs.positive_roots.back(), i);
  }
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
    const Eigen::VectorXi beta = rs.positive_roots[k];
    for (int i = 0; i < r; ++i) {
      Eigen::VectorXi cand = beta + rs.cartan.row(i).transpose();
      if (index.count(cand)) continue;
      // Root string: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
      // p = length of the string below beta.
      int p = 0;
      Eigen::VectorXi down = beta - rs.cartan.row(i).transpose();
      while (index.count(down)) {
        ++p;
        down -= rs.cartan.row(i).transpose();
      }
      if (p - beta[i] > 0) {
        const int at = static_cast<int>(rs.positive_roots.size());
        rs.positive_roots.push_back(cand);
        rs.root_height.push_back(rs.root_height[k] + 1);
        rs.root_decomposition.push_back({i, static_cast<int>(k)});
        index.emplace(cand, at);
      }
    }
  }
  // canonical order: by height, then lexicographic
  std::vector<int> perm(rs.positive_roots.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (rs.root_height[a] != rs.root_height[b]) return rs.root_height[a] < rs.root_height[b];
    return detail::VecLess{}(rs.positive_roots[a], rs.positive_roots[b]);
  });
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  RootSystem tmp;
  for (int p : perm) {
    tmp.positive_roots.push_back(rs.positive_roots[p]);
    tmp.root_height.push_back(rs.root_height[p]);
    auto dec = rs.root_decomposition[p];
    if (dec[1] >= 0) dec[1] = inv[dec[1]];
    tmp.root_decomposition.push_back(dec);
  }
  rs.positive_roots = std::move(tmp.positive_roots);
  rs.root_height = std::move(tmp.root_height);
  rs.root_decomposition = std::move(tmp.root_decomposition);
}

void build_structure_constants(RootSystem& rs) {
  // Defining representation: cheapest fundamental weight.
  Eigen::VectorXi best;
  long long best_dim = -1;
  for (int i = 0; i < rs.rank; ++i) {
    Eigen::VectorXi w = Eigen::VectorXi::Zero(rs.rank);
    w[i] = 1;
    const long long d = weyl_dimension(rs, WeightVector{rs.tag, w});
    if (best_dim < 0 || d < best_dim) {
      best_dim = d;
      best = w;
    }
  }
  const auto mod = detail::build_module(rs, best);
  std::vector<double> scales;
  const auto t = detail::compact_basis_action(rs, mod, best, true, &scales);
  rs.root_scale = scales;

  const double index2 = 2.0 * to_double(detail::dynkin_index(rs, best));
  const int n = rs.dim_g;
  rs.f.assign(static_cast<size_t>(n) * n * n, 0.0);
  auto at = [n](int a, int b, int c) { return (static_cast<size_t>(a) * n + b) * n + c; };

  // raw(a,b,c) = <[xi_a, xi_b], xi_c> for a < b; f_abc = -tr([T_a,T_b] T_c) / 2I.
  std::vector<double> raw(rs.f.size(), 0.0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Eigen::MatrixXcd comm = t[a] * t[b] - t[b] * t[a];
      for (int c = 0; c < n; ++c) {
        const std::complex<double> tr = -(comm * t[c]).trace() / index2;
        if (std::abs(tr.imag()) > 1e-9)
          throw std::runtime_error("structure constants acquired an imaginary part");
        raw[at(a, b, c)] = tr.real();
      }
    }
  }
  // Antisymmetrise over a < b < c and copy one value into all six slots, so
  // total antisymmetry is exact and not just up to rounding.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const double v = (raw[at(a, b, c)] + raw[at(b, c, a)] - raw[at(a, c, b)]) / 3.0;
        rs.f[at(a, b, c)] = v;
        rs.f[at(b, c, a)] = v;
        rs.f[at(c, a, b)] = v;
        rs.f[at(b, a, c)] = -v;
        rs.f[at(a, c, b)] = -v;
        rs.f[at(c, b, a)] = -v;
      }
}

RootSystem build_simple(GroupTag tag) {
  RootSystem rs;
  rs.tag = tag;
  rs.rank = tag.rank;
  const SeriesData sd = series_data(tag);
  rs.cartan = sd.cartan;
  rs.symmetrizer = sd.d;

  // <omega_i, omega_j> = (A^-1)_{ji} d_i ;  <alpha_i^vee, alpha_j^vee> = A_ij / d_i
  RatMat a(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) a(i, j) = Rat(rs.cartan(i, j));
  const RatMat ainv = a.inverse();
  rs.gram_weights = RatMat(rs.rank, rs.rank);
  rs.gram_coroots = RatMat(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      rs.gram_weights(i, j) = ainv(j, i) * sd.d[i];
      rs.gram_coroots(i, j) = Rat(rs.cartan(i, j)) / sd.d[i];
    }

  build_positive_roots(rs);
  rs.rho = Eigen::VectorXi::Ones(rs.rank);
  rs.dim_g = rs.rank + 2 * static_cast<int>(rs.positive_roots.size());

  const Eigen::VectorXi theta = rs.positive_roots.back();
  const Rat theta_sq = form_value(rs.gram_weights, RatVec(theta.begin(), theta.end()),
                                  RatVec(theta.begin(), theta.end()));
  if (theta_sq != Rat(2))
    throw std::logic_error("basic form normalisation broken: |theta|^2 != 2");
  RatVec rho_r(rs.rank, Rat(1));
  const Rat rho_theta = form_value(rs.gram_weights, rho_r, RatVec(theta.begin(), theta.end()));
  if (rho_theta.denominator() != 1)
    throw std::logic_error("dual Coxeter number came out non-integral");
  rs.dual_coxeter = static_cast<int>(1 + rho_theta.numerator());

  rs.cartan_orth = orthonormal_rows(rs.gram_coroots);
  build_structure_constants(rs);
  return rs;
}

}  // namespace

std::string GroupTag::str() const {
  switch (series) {
    case Series::A: return "A" + std::to_string(rank);
    case Series::B: return "B" + std::to_string(rank);
    case Series::G: return "G" + std::to_string(rank);
    case Series::Torus: return "T" + std::to_string(rank);
  }
  return "?";
}

GroupTag GroupTag::parse(std::string_view s) {
  auto fail = [&]() -> GroupTag {
    throw std::invalid_argument("unsupported group: " + std::string(s));
  };
  if (s.empty()) return fail();
  if (s.substr(0, 6) == "torus(" && s.back() == ')') {
    const int r = std::atoi(std::string(s.substr(6, s.size() - 7)).c_str());
    if (r < 1 || r > 4) return fail();
    return {Series::Torus, r};
  }
  if (s.size() != 2 || !std::isdigit(static_cast<unsigned char>(s[1]))) return fail();
  const int r = s[1] - '0';
  switch (s[0]) {
    case 'A': if (r >= 1 && r <= 3) return {Series::A, r}; break;
    case 'B': if (r == 2) return {Series::B, r}; break;
    case 'G': if (r == 2) return {Series::G, r}; break;
    case 'T': if (r >= 1 && r <= 4) return {Series::Torus, r}; break;
    default: break;
  }
  return fail();
}

int RootSystem::highest_root_index() const {
  if (is_torus()) throw std::invalid_argument("no highest root: " + tag.str() + " is a torus");
  return static_cast<int>(positive_roots.size()) - 1;
}

RootSystem build_torus(int rank, RatMat gram) {
  if (rank < 1 || rank > 4)
    throw std::invalid_argument("unsupported group: torus(" + std::to_string(rank) + ")");
  if (gram.rows() != rank || gram.cols() != rank || !gram.symmetric() || !gram.positive_definite())
    throw std::invalid_argument("torus Gram matrix must be symmetric positive definite");
  RootSystem rs;
  rs.tag = {Series::Torus, rank};
  rs.rank = rank;
  rs.gram_coroots = gram;
  rs.gram_weights = gram.inverse();
  rs.rho = Eigen::VectorXi::Zero(rank);
  rs.dual_coxeter = 0;
  rs.dim_g = rank;
  rs.cartan_orth = orthonormal_rows(rs.gram_coroots);
  rs.f.assign(static_cast<size_t>(rank) * rank * rank, 0.0);
  return rs;
}

RootSystem build_root_system(GroupTag tag) {
  if (tag.series == Series::Torus) return build_torus(tag.rank, RatMat::identity(tag.rank));
  return build_simple(tag);
}

RootSystem build_root_system(std::string_view tag) {
  return build_root_system(GroupTag::parse(tag));
}

Rat basic_form(const RootSystem& rs, const WeightVector& a, const WeightVector& b) {
  check_same(rs.tag, a.tag, "basic_form");
  check_same(rs.tag, b.tag, "basic_form");
  return form_value(rs.gram_weights, RatVec(a.coords.begin(), a.coords.end()),
                    RatVec(b.coords.begin(), b.coords.end()));
}

double basic_form(const RootSystem& rs, const CartanVector& a, const CartanVector& b) {
  check_same(rs.tag, a.tag, "basic_form");
  check_same(rs.tag, b.tag, "basic_form");
  double s = 0;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      s += a.coords[i] * to_double(rs.gram_coroots(i, j)) * b.coords[j];
  return s;
}

Rat basic_form_exact(const RootSystem& rs, const RatVec& a, const RatVec& b) {
  return form_value(rs.gram_coroots, a, b);
}

Rat norm_sq(const RootSystem& rs, const WeightVector& v) { return basic_form(rs, v, v); }

double weight_pairing(const WeightVector& nu, const CartanVector& mu) {
  check_same(nu.tag, mu.tag, "weight_pairing");
  double s = 0;
  for (int i = 0; i < nu.coords.size(); ++i) s += nu.coords[i] * mu.coords[i];
  return s;
}

Eigen::VectorXi simple_reflection(const RootSystem& rs, int i, const Eigen::VectorXi& weight) {
  return weight - weight[i] * rs.cartan.row(i).transpose();
}

RatVec simple_reflection_cartan(const RootSystem& rs, int i, const RatVec& coords) {
  Rat pairing(0);
  for (int j = 0; j < rs.rank; ++j) pairing += Rat(rs.cartan(i, j)) * coords[j];
  RatVec out = coords;
  out[i] -= pairing;
  return out;
}

Eigen::VectorXd simple_reflection_cartan(const RootSystem& rs, int i, const Eigen::VectorXd& coords) {
  double pairing = 0;
  for (int j = 0; j < rs.rank; ++j) pairing += rs.cartan(i, j) * coords[j];
  Eigen::VectorXd out = coords;
  out[i] -= pairing;
  return out;
}

long long weyl_dimension(const RootSystem& rs, const WeightVector& lambda) {
  if (rs.is_torus()) throw std::invalid_argument("no Weyl group for torus " + rs.tag.str());
  check_same(rs.tag, lambda.tag, "weyl_dimension");
  const Eigen::VectorXi lr = lambda.coords + rs.rho;
  Rat num(1), den(1);
  for (const auto& alpha : rs.positive_roots) {
    RatVec av(alpha.begin(), alpha.end());
    num *= form_value(rs.gram_weights, RatVec(lr.begin(), lr.end()), av);
    den *= form_value(rs.gram_weights, RatVec(rs.rho.begin(), rs.rho.end()), av);
  }
  const Rat dim = num / den;
  if (dim.denominator() != 1 || dim <= 0)
    throw std::runtime_error("Weyl dimension formula produced a non-positive or fractional value");
  return dim.numerator();
}

WeylData weyl_data(const RootSystem& rs, const WeightVector& lambda) {
  if (rs.is_torus()) throw std::invalid_argument("no Weyl group for torus " + rs.tag.str());
  check_same(rs.tag, lambda.tag, "weyl_data");
  WeylData out;
  std::set<Eigen::VectorXi, detail::VecLess> orbit;
  std::vector<Eigen::VectorXi> frontier{lambda.coords};
  orbit.insert(lambda.coords);
  while (!frontier.empty()) {
    std::vector<Eigen::VectorXi> next;
    for (const auto& w : frontier)
      for (int i = 0; i < rs.rank; ++i) {
        Eigen::VectorXi r = simple_reflection(rs, i, w);
        if (orbit.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  out.orbit.assign(orbit.begin(), orbit.end());
  for (const auto& w : out.orbit)
    if ((w.array() >= 0).all()) out.dominant = w;
  out.dimension = weyl_dimension(rs, WeightVector{rs.tag, out.dominant});
  return out;
}

long long weyl_order(const RootSystem& rs) {
  if (rs.is_torus()) throw std::invalid_argument("no Weyl group for torus " + rs.tag.str());
  return static_cast<long long>(weyl_data(rs, WeightVector{rs.tag, rs.rho}).orbit.size());
}

std::vector<WeightVector> dominant_weights_up_to_dim(const RootSystem& rs, long long max_dim) {
  if (rs.is_torus()) throw std::invalid_argument("no Weyl group for torus " + rs.tag.str());
  std::set<Eigen::VectorXi, detail::VecLess> seen;
  std::vector<Eigen::VectorXi> frontier{Eigen::VectorXi::Zero(rs.rank)};
  if (weyl_dimension(rs, WeightVector{rs.tag, frontier[0]}) <= max_dim) seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Eigen::VectorXi> next;
    for (const auto& w : frontier)
      for (int i = 0; i < rs.rank; ++i) {
        Eigen::VectorXi cand = w;
        cand[i] += 1;
        if (seen.count(cand)) continue;
        if (weyl_dimension(rs, WeightVector{rs.tag, cand}) > max_dim) continue;
        seen.insert(cand);
        next.push_back(cand);
      }
    frontier = std::move(next);
  }
  std::vector<WeightVector> out;
  for (const auto& w : seen) out.push_back(WeightVector{rs.tag, w});
  std::sort(out.begin(), out.end(), [&](const WeightVector& a, const WeightVector& b) {
    const long long da = weyl_dimension(rs, a), db = weyl_dimension(rs, b);
    if (da != db) return da < db;
    return detail::VecLess{}(a.coords, b.coords);
  });
  return out;
}

Eigen::VectorXd embed_cartan(const RootSystem& rs, const CartanVector& mu) {
  check_same(rs.tag, mu.tag, "embed_cartan");
  return rs.cartan_orth.transpose().partialPivLu().solve(mu.coords);
}

nlohmann::ordered_json root_system_json(const RootSystem& rs) {
  nlohmann::ordered_json j;
  j["tag"] = rs.tag.str();
  nlohmann::ordered_json cm = nlohmann::ordered_json::array();
  for (int i = 0; i < rs.cartan.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < rs.cartan.cols(); ++k) row.push_back(rs.cartan(i, k));
    cm.push_back(row);
  }
  j["cartan_matrix"] = cm;
  nlohmann::ordered_json gram = nlohmann::ordered_json::array();
  for (int i = 0; i < rs.gram_weights.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < rs.gram_weights.cols(); ++k) row.push_back(rat_str(rs.gram_weights(i, k)));
    gram.push_back(row);
  }
  j["gram"] = gram;
  j["rho"] = std::vector<int>(rs.rho.begin(), rs.rho.end());
  j["dual_coxeter"] = rs.dual_coxeter;
  return j;
}

namespace detail {

double structure_constant_antisymmetry_residual(const RootSystem& rs) {
  const int n = rs.dim_g;
  double worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        worst = std::max(worst, std::abs(rs.fval(a, b, c) + rs.fval(b, a, c)));
        worst = std::max(worst, std::abs(rs.fval(a, b, c) + rs.fval(a, c, b)));
        worst = std::max(worst, std::abs(rs.fval(a, b, c) - rs.fval(c, a, b)));
      }
  return worst;
}

double structure_constant_jacobi_residual(const RootSystem& rs) {
  const int n = rs.dim_g;
  double worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int e = 0; e < n; ++e) {
          double s = 0;
          for (int c = 0; c < n; ++c)
            s += rs.fval(a, b, c) * rs.fval(c, d, e) + rs.fval(b, d, c) * rs.fval(c, a, e) +
                 rs.fval(d, a, c) * rs.fval(c, b, e);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

}  // namespace detail
}  // namespace diracmf
