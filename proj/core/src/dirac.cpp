#include "diracmf/dirac.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "diracmf/potential.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "kron.hpp"

namespace diracmf {
namespace {

using Cplx = std::complex<double>;

// 6 sum_{a<b<c} f_abc psi_a psi_b psi_c  (= sum over all index triples).
Eigen::MatrixXcd cubic_element(const RootSystem& rs, const SpinorModule& sm) {
  const int n = rs.dim_g;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(sm.dim, sm.dim);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Eigen::MatrixXcd pair;
      bool have_pair = false;
      for (int c = b + 1; c < n; ++c) {
        const double fabc = rs.fval(a, b, c);
        if (fabc == 0.0) continue;
        if (!have_pair) {
          pair = sm.psi[a] * sm.psi[b];
          have_pair = true;
        }
        h += (6.0 * fabc) * (pair * sm.psi[c]);
      }
    }
  return h;
}

Eigen::VectorXd cartan_direction(const RootSystem& rs, int j) {
  CartanVector e{rs.tag, Eigen::VectorXd::Unit(rs.rank, j)};
  Eigen::VectorXd full = Eigen::VectorXd::Zero(rs.dim_g);
  full.head(rs.rank) = embed_cartan(rs, e);
  return full;
}

Eigen::MatrixXcd spinor_lift_on(const SpinorModule& sm, const Eigen::VectorXd& on_coords) {
  const int n = sm.n;
  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(sm.dim, sm.dim);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      double coeff = 0;
      for (int d = 0; d < n; ++d)
        if (on_coords[d] != 0.0) coeff += on_coords[d] * sm.rs.fval(d, a, b);
      if (coeff != 0.0) sigma += coeff * (sm.psi[a] * sm.psi[b]);
    }
  return (-0.5 * sm.kappa) * sigma;
}

std::mutex calibration_mutex;
std::map<std::string, Calibration> calibration_registry;

}  // namespace

Eigen::MatrixXcd spinor_lift(const SpinorModule& sm, const CartanVector& mu) {
  if (!(sm.rs.tag == mu.tag))
    throw std::invalid_argument("mismatched root systems in spinor_lift");
  Eigen::VectorXd full = Eigen::VectorXd::Zero(sm.n);
  full.head(sm.rs.rank) = embed_cartan(sm.rs, mu);
  return spinor_lift_on(sm, full);
}

DiracFamily cubic_dirac(const IrrepMatrices& rep, const SpinorModule& sm, const Calibration& cal) {
  if (!(rep.rs.tag == sm.rs.tag))
    throw std::invalid_argument("mismatched root systems in cubic_dirac: " + rep.rs.tag.str() +
                                " vs " + sm.rs.tag.str());
  if (cal.kappa != sm.kappa)
    throw std::invalid_argument("calibration kappa disagrees with the spinor module");

  const RootSystem& rs = rep.rs;
  const int n = rs.dim_g;
  const int nv = rep.dim;
  const int ns = sm.dim;
  const double c3 = to_double(cal.cubic_coeff);

  DiracFamily df;
  df.rep = rep;
  df.sm = sm;
  df.cal = cal;
  df.total_dim = nv * ns;
  df.lambda_rho_sq = to_double(
      norm_sq(rs, WeightVector{rs.tag, rep.lambda.coords + rs.rho}));

  const Eigen::MatrixXcd h = cubic_element(rs, sm);
  const Eigen::MatrixXcd idv = Eigen::MatrixXcd::Identity(nv, nv);
  const Eigen::MatrixXcd ids = Eigen::MatrixXcd::Identity(ns, ns);

  {
    std::vector<Eigen::MatrixXcd> left, right;
    left.reserve(n + 1);
    right.reserve(n + 1);
    for (int a = 0; a < n; ++a) {
      left.push_back(rep.action[a]);
      right.push_back(sm.psi[a]);
    }
    left.push_back(idv);
    right.push_back(c3 * h);
    df.d0 = detail::kron_sum(left, right);
  }

  // D0^2 term by term: (T_a T_b, psi_a psi_b), (T_a, c3 {psi_a, H}), (Id, c3^2 H^2).
  {
    std::vector<Eigen::MatrixXcd> left, right;
    left.reserve(n * n + n + 1);
    right.reserve(n * n + n + 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        left.push_back(rep.action[a] * rep.action[b]);
        right.push_back(sm.psi[a] * sm.psi[b]);
      }
    for (int a = 0; a < n; ++a) {
      left.push_back(rep.action[a]);
      right.push_back(c3 * (sm.psi[a] * h + h * sm.psi[a]));
    }
    left.push_back(idv);
    right.push_back((c3 * c3) * (h * h));
    df.square_defect = detail::kron_sum(left, right);
    df.square_defect += df.lambda_rho_sq * Eigen::MatrixXcd::Identity(df.total_dim, df.total_dim);
  }

  // Cross terms {D0, Id (x) psi(d_j)} minus the expected 2 t T_SV(d_j).
  df.cross_defect.reserve(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    const Eigen::VectorXd dj = cartan_direction(rs, j);
    Eigen::MatrixXcd psi_d = Eigen::MatrixXcd::Zero(ns, ns);
    for (int a = 0; a < n; ++a)
      if (dj[a] != 0.0) psi_d += dj[a] * sm.psi[a];

    std::vector<Eigen::MatrixXcd> left, right;
    left.reserve(n + 2);
    right.reserve(n + 2);
    for (int a = 0; a < n; ++a) {
      left.push_back(rep.action[a]);
      right.push_back(sm.psi[a] * psi_d + psi_d * sm.psi[a]);
    }
    left.push_back(idv);
    right.push_back(c3 * (h * psi_d + psi_d * h));

    // expected: 2 t (T(d_j) (x) Id + Id (x) sigma(d_j))
    Eigen::MatrixXcd tv = Eigen::MatrixXcd::Zero(nv, nv);
    for (int a = 0; a < n; ++a)
      if (dj[a] != 0.0) tv += dj[a] * rep.action[a];
    const Eigen::MatrixXcd sig = spinor_lift_on(sm, dj);
    left.push_back((-2.0 * cal.t_sign) * tv);
    right.push_back(ids);
    left.push_back(idv);
    right.push_back((-2.0 * cal.t_sign) * sig);

    df.cross_defect.push_back(detail::kron_sum(left, right));
    df.tv_dir.push_back(std::move(tv));
    df.sig_dir.push_back(sig);
  }
  return df;
}

DiracFamily cubic_dirac(const IrrepMatrices& rep, const SpinorModule& sm) {
  Calibration cal;
  {
    std::lock_guard lock(calibration_mutex);
    auto it = calibration_registry.find(rep.rs.tag.str());
    if (it != calibration_registry.end()) cal = it->second;
    else {
      cal = calibrate(rep.rs);
      calibration_registry.emplace(rep.rs.tag.str(), cal);
    }
  }
  if (cal.kappa != sm.kappa)
    throw std::invalid_argument("spinor module kappa " + std::to_string(sm.kappa) +
                                " disagrees with calibrated kappa " + std::to_string(cal.kappa));
  return cubic_dirac(rep, sm, cal);
}

Eigen::MatrixXcd dirac_at(const DiracFamily& df, const CartanVector& mu) {
  if (!(df.rep.rs.tag == mu.tag))
    throw std::invalid_argument("mismatched root systems in dirac_at");
  const Eigen::MatrixXcd psi_mu = clifford_vector(df.sm, mu);
  Eigen::MatrixXcd d = df.d0;
  const int nv = df.rep.dim, ns = df.sm.dim;
  for (int i = 0; i < nv; ++i)
    d.block(i * ns, i * ns, ns, ns) += Cplx(0, 1) * psi_mu;
  return d;
}

Eigen::MatrixXcd module_action(const DiracFamily& df, const CartanVector& mu) {
  const Eigen::MatrixXcd tv = cartan_action(df.rep, mu);
  const Eigen::MatrixXcd sig = spinor_lift(df.sm, mu);
  const int nv = df.rep.dim, ns = df.sm.dim;
  Eigen::MatrixXcd out = detail::kron(tv, Eigen::MatrixXcd::Identity(ns, ns));
  for (int i = 0; i < nv; ++i) out.block(i * ns, i * ns, ns, ns) += sig;
  return out;
}

namespace {

// residual matrix of the square identity, reused by dirac_square and tests
Eigen::MatrixXcd square_residual_matrix(const DiracFamily& df, const CartanVector& mu) {
  const RootSystem& rs = df.rep.rs;
  if (!(rs.tag == mu.tag))
    throw std::invalid_argument("mismatched root systems in verify_square_identity");
  Eigen::MatrixXcd r = df.square_defect;
  for (int j = 0; j < rs.rank; ++j)
    if (mu.coords[j] != 0.0) r += Cplx(0, mu.coords[j]) * df.cross_defect[j];

  // exact Clifford square defect: psi(mu)^2 - |mu|^2 Id (zero when kappa=+1)
  const Eigen::MatrixXcd psi_mu = clifford_vector(df.sm, mu);
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Identity(df.sm.dim, df.sm.dim) * norm_sq(rs, mu)
                           - psi_mu * psi_mu;
  for (int i = 0; i < df.rep.dim; ++i)
    r.block(i * df.sm.dim, i * df.sm.dim, df.sm.dim, df.sm.dim) += block;
  return r;
}

}  // namespace

SquareLinkResiduals square_and_link_residuals(const DiracFamily& df,
                                              const std::vector<CartanVector>& mus) {
  const RootSystem& rs = df.rep.rs;
  const int r = rs.rank, nv = df.rep.dim, ns = df.sm.dim, total = df.total_dim;
  const int nm = static_cast<int>(mus.size());
  const double t = df.cal.t_sign;

  // per-mu small precomputations
  std::vector<Eigen::MatrixXcd> wv(nm), tv_sum(nm), sig_sum(nm), sig_fresh(nm), cliff(nm);
  std::vector<double> diag_scalar(nm);
  for (int m = 0; m < nm; ++m) {
    const CartanVector& mu = mus[m];
    if (!(rs.tag == mu.tag))
      throw std::invalid_argument("mismatched root systems in verify_square_identity");
    const double n2 = norm_sq(rs, mu);
    // W from the potential-operator formula on the freshly evaluated action
    wv[m] = lie_potential_on_module(cartan_action(df.rep, mu), n2);
    tv_sum[m] = Eigen::MatrixXcd::Zero(nv, nv);
    sig_sum[m] = Eigen::MatrixXcd::Zero(ns, ns);
    for (int k = 0; k < r; ++k) {
      if (mu.coords[k] == 0.0) continue;
      tv_sum[m] += mu.coords[k] * df.tv_dir[k];
      sig_sum[m] += mu.coords[k] * df.sig_dir[k];
    }
    sig_fresh[m] = spinor_lift(df.sm, mu);
    const Eigen::MatrixXcd psi_mu = clifford_vector(df.sm, mu);
    cliff[m] = n2 * Eigen::MatrixXcd::Identity(ns, ns) - psi_mu * psi_mu;
    // scalar chain of the link: -(|l+r|^2 + |mu|^2) from D^2 plus |l+r|^2;
    // the remaining |mu|^2 arrives through the potential operator's diagonal
    diag_scalar[m] = (-(df.lambda_rho_sq + n2)) + df.lambda_rho_sq;
  }

  // single streaming pass over the cached defect matrices; all samples are
  // evaluated per entry while it sits in registers
  std::vector<int> vidx(total), sidx(total);
  for (int g = 0; g < total; ++g) {
    vidx[g] = g / ns;
    sidx[g] = g % ns;
  }
  std::vector<double> sq2(nm, 0.0), lk2(nm, 0.0);
  std::vector<const Cplx*> cross(r);
  const Cplx* sd = df.square_defect.data();
  for (int k = 0; k < r; ++k) cross[k] = df.cross_defect[k].data();

  for (int col = 0; col < total; ++col) {
    const int j = vidx[col], q = sidx[col];
    const size_t base = static_cast<size_t>(col) * total;
    for (int row = 0; row < total; ++row) {
      const int i = vidx[row], p = sidx[row];
      const Cplx sde = sd[base + row];
      Cplx d[3] = {};
      for (int k = 0; k < r; ++k) d[k] = cross[k][base + row];
      const bool diag_block = i == j;
      const bool diag_entry = diag_block && p == q;

      for (int m = 0; m < nm; ++m) {
        Cplx val = sde;
        for (int k = 0; k < r; ++k) val += Cplx(0, mus[m].coords[k]) * d[k];
        if (diag_block) val += cliff[m](p, q);
        sq2[m] = std::max(sq2[m], std::norm(val));

        // D_mu^2 + 2 W + |lambda+rho|^2, with D^2 using the cached
        // per-direction actions and W the potential-operator formula
        Cplx link = val;
        if (p == q) link += Cplx(0, 2.0 * t) * tv_sum[m](i, j) + 2.0 * wv[m](i, j);
        if (diag_block) link += Cplx(0, 2.0 * t) * sig_sum[m](p, q) -
                                Cplx(0, 2.0) * sig_fresh[m](p, q);
        if (diag_entry) link += diag_scalar[m];
        lk2[m] = std::max(lk2[m], std::norm(link));
      }
    }
  }

  SquareLinkResiduals out;
  out.square.resize(nm);
  out.link.resize(nm);
  for (int m = 0; m < nm; ++m) {
    out.square[m] = std::sqrt(sq2[m]);
    out.link[m] = std::sqrt(lk2[m]);
  }
  return out;
}

double verify_square_identity(const DiracFamily& df, const CartanVector& mu) {
  return square_and_link_residuals(df, {mu}).square[0];
}

Eigen::MatrixXcd dirac_square(const DiracFamily& df, const CartanVector& mu) {
  Eigen::MatrixXcd sq = square_residual_matrix(df, mu);
  sq += Cplx(0, 2.0 * df.cal.t_sign) * module_action(df, mu);
  const double shift = df.lambda_rho_sq + norm_sq(df.rep.rs, mu);
  sq -= shift * Eigen::MatrixXcd::Identity(df.total_dim, df.total_dim);
  return sq;
}

double smallest_singular_value(const DiracFamily& df, const CartanVector& mu) {
  const Eigen::MatrixXcd d = dirac_at(df, mu);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(d);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

KernelScan kernel_locus_scan(const DiracFamily& df, const CartanVector& ray,
                             const std::vector<double>& grid, bool refine) {
  if (ray.coords.norm() == 0.0) throw std::invalid_argument("kernel_locus_scan: zero ray");
  KernelScan out;
  out.s = grid;
  out.sigma_min.reserve(grid.size());
  for (double s : grid) {
    CartanVector mu{ray.tag, s * ray.coords};
    out.sigma_min.push_back(smallest_singular_value(df, mu));
  }
  if (out.sigma_min.empty()) return out;

  auto argmin = static_cast<size_t>(
      std::min_element(out.sigma_min.begin(), out.sigma_min.end()) - out.sigma_min.begin());
  out.refined_s = out.s[argmin];
  out.refined_sigma = out.sigma_min[argmin];
  if (!refine) return out;

  double step = argmin + 1 < out.s.size() ? out.s[argmin + 1] - out.s[argmin]
                : argmin > 0              ? out.s[argmin] - out.s[argmin - 1]
                                          : 0.1;
  // Singular values grow linearly off a kernel point, so grid steps must
  // shrink to ~1e-10 before sigma_min drops below the 1e-8 detection level.
  for (int round = 0; round < 12 && step > 1e-10; ++round) {
    step /= 10.0;
    double best_s = out.refined_s, best_sigma = out.refined_sigma;
    for (int k = -10; k <= 10; ++k) {
      const double s = out.refined_s + k * step;
      if (s <= 0) continue;
      CartanVector mu{ray.tag, s * ray.coords};
      const double sigma = smallest_singular_value(df, mu);
      if (sigma < best_sigma) {
        best_sigma = sigma;
        best_s = s;
      }
    }
    out.refined_s = best_s;
    out.refined_sigma = best_sigma;
  }
  return out;
}

int kernel_dimension(const DiracFamily& df, const CartanVector& mu, double eigenvalue_tol) {
  const Eigen::MatrixXcd sq = dirac_square(df, mu);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(-0.5 * (sq + sq.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  int count = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) < eigenvalue_tol) ++count;
  return count;
}

double kernel_orbit_distance(const DiracFamily& df, const CartanVector& mu) {
  const RootSystem& rs = df.rep.rs;
  // orbit of the metric dual of lambda + rho, in coroot coordinates
  const WeylData wd = weyl_data(rs, WeightVector{rs.tag, df.rep.lambda.coords + rs.rho});
  const RatMat ginv = rs.gram_coroots.inverse();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& w : wd.orbit) {
    RatVec rhs(rs.rank);
    for (int i = 0; i < rs.rank; ++i) rhs[i] = Rat(w[i]);
    const RatVec dual = ginv * rhs;   // coroot coordinates of the dual point
    Eigen::VectorXd diff(rs.rank);
    for (int i = 0; i < rs.rank; ++i) diff[i] = mu.coords[i] - to_double(dual[i]);
    CartanVector delta{rs.tag, diff};
    best = std::min(best, std::sqrt(std::max(0.0, norm_sq(rs, delta))));
  }
  return best;
}

VanishingCertificate vanishing_certificate(const IrrepMatrices& rep, const DiracFamily& df,
                                           const CartanVector& mu_central) {
  const RootSystem& rs = rep.rs;
  if (rs.is_torus())
    throw std::invalid_argument("vanishing certificate needs a nonabelian algebra, got " +
                                rs.tag.str());
  if (!(rs.tag == mu_central.tag))
    throw std::invalid_argument("mismatched root systems in vanishing_certificate");
  for (int i = 0; i < rs.rank; ++i) {
    const Eigen::VectorXd reflected = simple_reflection_cartan(rs, i, mu_central.coords);
    if ((reflected - mu_central.coords).cwiseAbs().maxCoeff() > 1e-12)
      throw std::invalid_argument(
          "vanishing_certificate: mu is not Weyl-fixed (central); for a simple group mu must be 0");
  }

  const Eigen::MatrixXcd sq = dirac_square(df, mu_central);
  VanishingCertificate cert;
  double diag = 0;
  for (int i = 0; i < sq.rows(); ++i) diag += sq(i, i).real();
  cert.value = diag / sq.rows();
  cert.scalar_residual =
      (sq - cert.value * Eigen::MatrixXcd::Identity(sq.rows(), sq.cols())).cwiseAbs().maxCoeff();
  // -|lambda + mu + rho|^2, with mu central (zero for simple groups)
  cert.expected = -df.lambda_rho_sq - norm_sq(rs, mu_central);
  cert.pass = cert.scalar_residual <= 1e-9 && cert.value < 0 &&
              std::abs(cert.value - cert.expected) <= 1e-9;
  return cert;
}

Calibration calibrate(const RootSystem& rs) {
  if (rs.is_torus())
    throw std::invalid_argument("calibrate requires a simple group, got " + rs.tag.str());

  // Probe representations: trivial and the smallest fundamental weight.
  Eigen::VectorXi fundamental;
  long long best_dim = -1;
  for (int i = 0; i < rs.rank; ++i) {
    Eigen::VectorXi w = Eigen::VectorXi::Zero(rs.rank);
    w[i] = 1;
    const long long d = weyl_dimension(rs, WeightVector{rs.tag, w});
    if (best_dim < 0 || d < best_dim) {
      best_dim = d;
      fundamental = w;
    }
  }
  std::vector<IrrepMatrices> reps;
  reps.push_back(irrep_matrices(rs, WeightVector{rs.tag, Eigen::VectorXi::Zero(rs.rank)}));
  reps.push_back(irrep_matrices(rs, WeightVector{rs.tag, fundamental}));

  std::map<int, SpinorModule> spinors;
  spinors.emplace(1, spinor_module(rs, 1));
  spinors.emplace(-1, spinor_module(rs, -1));

  std::mt19937_64 rng(0x5eedcafeULL);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::vector<CartanVector> probes;
  probes.push_back(CartanVector{rs.tag, Eigen::VectorXd::Zero(rs.rank)});
  while (probes.size() < 6) {
    Eigen::VectorXd c(rs.rank);
    for (int i = 0; i < rs.rank; ++i) c[i] = dist(rng);
    CartanVector mu{rs.tag, c};
    if (norm_sq(rs, mu) > 0.01) probes.push_back(mu);
  }

  const Rat coeffs[] = {Rat(1, 6), Rat(-1, 6), Rat(1, 12), Rat(-1, 12)};
  Calibration winner;
  int passed = 0;
  for (int kappa : {1, -1})
    for (const Rat& c3 : coeffs)
      for (int t : {1, -1}) {
        Calibration cand{kappa, c3, t, 0, 0.0};
        double worst = 0;
        for (const auto& rep : reps) {
          const DiracFamily df = cubic_dirac(rep, spinors.at(kappa), cand);
          for (const auto& mu : probes)
            worst = std::max(worst, verify_square_identity(df, mu));
          if (worst > 1e-9) break;
        }
        if (worst <= 1e-9) {
          ++passed;
          cand.residual = worst;
          winner = cand;
        }
      }
  if (passed != 1)
    throw std::runtime_error("no consistent convention: " + std::to_string(passed) +
                             " calibration candidates passed for " + rs.tag.str() +
                             " (implementation bug, not a convention gap)");
  winner.candidates_passed = 1;
  return winner;
}

nlohmann::ordered_json calibration_json(const Calibration& cal) {
  nlohmann::ordered_json j;
  j["kappa"] = cal.kappa;
  j["cubic_coeff"] = rat_str(cal.cubic_coeff);
  j["t_sign"] = cal.t_sign;
  j["candidates_passed"] = cal.candidates_passed;
  j["residual"] = cal.residual;
  return j;
}

}  // namespace diracmf
