#include "diracmf/loop.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace diracmf {
namespace {

using Cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::MatrixXd ad_matrix(const RootSystem& rs, const Eigen::VectorXd& x) {
  const int n = rs.dim_g;
  Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    if (x[a] == 0.0) continue;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const double f = rs.fval(a, b, c);
        if (f != 0.0) ad(c, b) += x[a] * f;
      }
  }
  return ad;
}

// exp(t ad_x) via the hermitian eigendecomposition of i ad_x.
struct AdjointFlow {
  Eigen::MatrixXcd vectors;
  Eigen::VectorXd freq;   // exp(t ad) = V diag(exp(-i t freq)) V^dagger

  explicit AdjointFlow(const Eigen::MatrixXd& ad) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Cplx(0, 1) * ad.cast<Cplx>());
    vectors = es.eigenvectors();
    freq = es.eigenvalues();
  }

  Eigen::MatrixXd at(double t) const {
    Eigen::VectorXcd ph(freq.size());
    for (int i = 0; i < freq.size(); ++i) ph[i] = std::exp(Cplx(0, -t * freq[i]));
    const Eigen::MatrixXcd m = vectors * ph.asDiagonal() * vectors.adjoint();
    return m.real();
  }
};

std::vector<AdjointFlow> flows_for(const RootSystem& rs, const PathElement& gamma) {
  std::vector<AdjointFlow> flows;
  flows.reserve(gamma.generators.size());
  for (const auto& g : gamma.generators) {
    if (g.size() != rs.dim_g)
      throw std::invalid_argument("path generator has wrong dimension");
    flows.emplace_back(ad_matrix(rs, g));
  }
  return flows;
}

// gamma^-1 gamma' for gamma(t) = prod_k exp(t mu_k):
//   sum_m Ad_{exp(t mu_K)^-1 ... exp(t mu_{m+1})^-1}(mu_m)  (last term plain).
Eigen::VectorXd maurer_cartan(const RootSystem& rs, const PathElement& gamma,
                              const std::vector<AdjointFlow>& flows, double t) {
  const int k = static_cast<int>(gamma.generators.size());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(rs.dim_g);
  for (int m = 0; m < k; ++m) {
    Eigen::VectorXd v = gamma.generators[m];
    for (int l = k - 1; l > m; --l) v = flows[l].at(-t) * v;
    out += v;
  }
  return out;
}

}  // namespace

FourierLoop FourierLoop::zero(int dim_g, int truncation) {
  FourierLoop l;
  l.truncation = truncation;
  l.modes = Eigen::MatrixXcd::Zero(dim_g, 2 * truncation + 1);
  return l;
}

double FourierLoop::reality_residual() const {
  double worst = 0;
  for (int n = -truncation; n <= truncation; ++n) {
    const Eigen::VectorXcd diff =
        modes.col(n + truncation) - modes.col(-n + truncation).conjugate();
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  return worst;
}

FourierLoop cartan_loop(const RootSystem& rs, const Eigen::MatrixXcd& coroot_modes) {
  if (coroot_modes.rows() != rs.rank || coroot_modes.cols() % 2 == 0)
    throw std::invalid_argument("cartan_loop: modes must be rank x (2M+1)");
  const int m = static_cast<int>(coroot_modes.cols() / 2);
  FourierLoop l = FourierLoop::zero(rs.dim_g, m);
  // embed each mode: coroot coordinates -> orthonormal coordinates
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(rs.cartan_orth.transpose());
  for (int c = 0; c < coroot_modes.cols(); ++c) {
    const Eigen::VectorXcd col = coroot_modes.col(c);
    const Eigen::VectorXd re = lu.solve(col.real());
    const Eigen::VectorXd im = lu.solve(col.imag());
    for (int i = 0; i < rs.rank; ++i) l.modes(i, c) = Cplx(re[i], im[i]);
  }
  return l;
}

Eigen::VectorXcd loop_value(const FourierLoop& loop, double t) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(loop.modes.rows());
  for (int n = -loop.truncation; n <= loop.truncation; ++n)
    v += loop.modes.col(n + loop.truncation) * std::exp(Cplx(0, n * t));
  return v;
}

PathElement cartan_path(const RootSystem& rs, const CartanVector& mu) {
  if (!(rs.tag == mu.tag)) throw std::invalid_argument("mismatched root systems in cartan_path");
  Eigen::VectorXd full = Eigen::VectorXd::Zero(rs.dim_g);
  full.head(rs.rank) = embed_cartan(rs, mu);
  return PathElement{{full}};
}

PathElement compose(const PathElement& first, const PathElement& second) {
  PathElement p = first;
  p.generators.insert(p.generators.end(), second.generators.begin(), second.generators.end());
  return p;
}

Eigen::MatrixXd path_adjoint(const RootSystem& rs, const PathElement& gamma, double t) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(rs.dim_g, rs.dim_g);
  for (const auto& g : gamma.generators) m = m * AdjointFlow(ad_matrix(rs, g)).at(t);
  return m;
}

std::complex<double> path_cocycle(const RootSystem& rs, const PathElement& gamma,
                                  const std::function<Eigen::VectorXcd(double)>& alpha,
                                  int quadrature_order) {
  if (quadrature_order < 2) throw std::invalid_argument("quadrature order too low");
  const auto flows = flows_for(rs, gamma);
  Cplx integral = 0;
  for (int k = 0; k < quadrature_order; ++k) {
    const double t = kTwoPi * k / quadrature_order;
    const Eigen::VectorXd mc = maurer_cartan(rs, gamma, flows, t);
    // mc is real, so the hermitian dot is the bilinear pairing here
    integral += mc.cast<Cplx>().dot(alpha(t));
  }
  integral *= kTwoPi / quadrature_order;
  return Cplx(0, -1.0 / kTwoPi) * integral;
}

LoopActionResult loop_action(const RootSystem& rs, const PathElement& gamma,
                             const ExtendedLoopVector& v, int quadrature_order,
                             double residual_bound) {
  const int m = v.loop.truncation;
  if (quadrature_order < 4 * m + 8)
    throw std::invalid_argument("quadrature order too low: need Q >= 4M + 8 = " +
                                std::to_string(4 * m + 8));
  if (v.loop.modes.rows() != rs.dim_g)
    throw std::invalid_argument("loop has wrong coefficient dimension");
  if (v.loop.reality_residual() > 1e-12)
    throw std::invalid_argument("loop is not algebra-valued: c_{-n} != conj(c_n)");

  const auto flows = flows_for(rs, gamma);
  const int q = quadrature_order;

  // sample alpha and Ad_gamma(alpha) on the periodic grid
  std::vector<Eigen::VectorXcd> transported(q);
  Cplx integral = 0;
  for (int k = 0; k < q; ++k) {
    const double t = kTwoPi * k / q;
    const Eigen::VectorXcd a = loop_value(v.loop, t);
    const Eigen::VectorXd mc = maurer_cartan(rs, gamma, flows, t);
    integral += mc.cast<Cplx>().dot(a);
    Eigen::MatrixXd ad = Eigen::MatrixXd::Identity(rs.dim_g, rs.dim_g);
    for (size_t l = 0; l < flows.size(); ++l) ad = ad * flows[l].at(t);
    transported[k] = ad.cast<Cplx>() * a;
  }
  integral *= kTwoPi / q;

  LoopActionResult out;
  out.value.central = v.central + Cplx(0, -1.0 / kTwoPi) * integral;
  out.value.loop = FourierLoop::zero(rs.dim_g, m);
  for (int n = -m; n <= m; ++n) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(rs.dim_g);
    for (int k = 0; k < q; ++k)
      c += transported[k] * std::exp(Cplx(0, -n * kTwoPi * k / q));
    out.value.loop.modes.col(n + m) = c / static_cast<double>(q);
  }

  // defect of the truncated re-expansion against the sampled transport
  double rms = 0;
  for (int k = 0; k < q; ++k) {
    const Eigen::VectorXcd rec = loop_value(out.value.loop, kTwoPi * k / q);
    rms += (rec - transported[k]).squaredNorm();
  }
  out.truncation_residual = std::sqrt(rms / q);
  out.truncated = out.truncation_residual > residual_bound;
  return out;
}

std::complex<double> extension_cocycle(const RootSystem& rs, const FourierLoop& alpha,
                                       const FourierLoop& beta) {
  if (alpha.truncation != beta.truncation)
    throw std::invalid_argument("truncation mismatch in extension_cocycle");
  if (alpha.modes.rows() != rs.dim_g || beta.modes.rows() != rs.dim_g)
    throw std::invalid_argument("loop has wrong coefficient dimension");
  const int m = alpha.truncation;
  Cplx omega = 0;
  for (int n = -m; n <= m; ++n) {
    const Eigen::VectorXcd a = alpha.modes.col(-n + m);
    const Eigen::VectorXcd b = beta.modes.col(n + m);
    omega += Cplx(0, n) * (a.transpose() * b)(0, 0);   // complex-bilinear pairing
  }
  return omega;
}

namespace {

LocalPotentialValue local_superpotential_impl(const RootSystem& rs, const Eigen::VectorXd& c,
                                              const Rat* exact_norm_sq, int q) {
  // shortest-logarithm check over mu + Pi within a bounding box
  const double nrm = [&] {
    CartanVector mu{rs.tag, c};
    return norm_sq(rs, mu);
  }();
  int box = 2;
  for (int i = 0; i < c.size(); ++i) box = std::max(box, static_cast<int>(std::ceil(std::abs(c[i]))) + 2);
  std::vector<Eigen::VectorXd> ties;
  std::vector<int> idx(c.size(), -box);
  for (;;) {
    Eigen::VectorXd shift(c.size());
    bool zero = true;
    for (int i = 0; i < c.size(); ++i) {
      shift[i] = idx[i];
      if (idx[i] != 0) zero = false;
    }
    if (!zero) {
      CartanVector shifted{rs.tag, c + shift};
      const double n2 = norm_sq(rs, shifted);
      if (n2 < nrm - 1e-12) {
        std::ostringstream os;
        os << "2 pi mu is not a shortest logarithm: |mu + p| < |mu| at p = (";
        for (int i = 0; i < shift.size(); ++i) os << (i ? "," : "") << shift[i];
        os << ")";
        throw std::invalid_argument(os.str());
      }
      if (std::abs(n2 - nrm) <= 1e-12 && nrm > 1e-12) ties.push_back(c + shift);
    }
    int k = 0;
    while (k < c.size() && ++idx[k] > box) idx[k++] = -box;
    if (k == c.size()) break;
  }
  if (!ties.empty()) {
    std::ostringstream os;
    os << "shortest logarithm is ambiguous (cut locus); tied candidates:";
    for (const auto& t : ties) {
      os << " (";
      for (int i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
      os << ")";
    }
    throw std::invalid_argument(os.str());
  }

  // Trivialising character on the logarithm path xi(t) = t mu:
  //   chi = -(i/2pi) Int_0^{2pi} <mu | t mu> dt = -i pi |mu|^2,
  // evaluated by an endpoint-weighted trapezoid (exact for linear integrands).
  // The central discrepancy of the two trivialisations is -chi.
  Rat rational_half(0);
  {
    Rat acc(0);
    for (int k = 0; k <= q; ++k) {
      const Rat w = (k == 0 || k == q) ? Rat(1, 2) : Rat(1);
      acc += w * Rat(k);
    }
    rational_half = acc / Rat(static_cast<long long>(q) * q);   // = 1/2 exactly
  }
  double quad = 0;
  for (int k = 0; k <= q; ++k) {
    const double w = (k == 0 || k == q) ? 0.5 : 1.0;
    quad += w * (static_cast<double>(k) / q);
  }
  quad /= q;

  LocalPotentialValue out;
  out.central = Cplx(0, std::numbers::pi * nrm * 2.0 * to_double(rational_half));
  out.lie_part = kTwoPi * c;
  out.quadrature_residual = std::abs(quad - to_double(rational_half)) * nrm * kTwoPi;
  if (exact_norm_sq) out.exact_value = (*exact_norm_sq) * rational_half;
  return out;
}

}  // namespace

LocalPotentialValue local_superpotential(const RootSystem& rs, const RatVec& mu_coroot,
                                         int quadrature_order) {
  if (static_cast<int>(mu_coroot.size()) != rs.rank)
    throw std::invalid_argument("local_superpotential: dimension mismatch");
  Eigen::VectorXd c(rs.rank);
  for (int i = 0; i < rs.rank; ++i) c[i] = to_double(mu_coroot[i]);
  const Rat exact = basic_form_exact(rs, mu_coroot, mu_coroot);

  // exact tie detection on the rational path
  int box = 2;
  for (int i = 0; i < rs.rank; ++i)
    box = std::max(box, static_cast<int>(std::ceil(std::abs(c[i]))) + 2);
  std::vector<int> idx(rs.rank, -box);
  for (;;) {
    RatVec shifted = mu_coroot;
    bool zero = true;
    for (int i = 0; i < rs.rank; ++i) {
      shifted[i] += idx[i];
      if (idx[i] != 0) zero = false;
    }
    if (!zero) {
      const Rat n2 = basic_form_exact(rs, shifted, shifted);
      if (n2 < exact)
        throw std::invalid_argument("2 pi mu is not a shortest logarithm of exp(2 pi mu)");
      if (n2 == exact && exact != 0) {
        std::ostringstream os;
        os << "shortest logarithm is ambiguous (cut locus); tied candidate: (";
        for (int i = 0; i < rs.rank; ++i) os << (i ? "," : "") << rat_str(shifted[i]);
        os << ")";
        throw std::invalid_argument(os.str());
      }
    }
    int k = 0;
    while (k < rs.rank && ++idx[k] > box) idx[k++] = -box;
    if (k == rs.rank) break;
  }
  return local_superpotential_impl(rs, c, &exact, quadrature_order);
}

LocalPotentialValue local_superpotential(const RootSystem& rs, const CartanVector& mu,
                                         int quadrature_order) {
  if (!(rs.tag == mu.tag))
    throw std::invalid_argument("mismatched root systems in local_superpotential");
  return local_superpotential_impl(rs, mu.coords, nullptr, quadrature_order);
}

}  // namespace diracmf
