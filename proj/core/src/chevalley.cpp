#include "chevalley.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diracmf::detail {
namespace {

Rat weight_form(const RootSystem& rs, const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  Rat s(0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      if (a[i] != 0 && b[j] != 0) s += Rat(a[i]) * rs.gram_weights(i, j) * Rat(b[j]);
  return s;
}

Eigen::VectorXi dominant_representative(const RootSystem& rs, Eigen::VectorXi w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (w[i] < 0) {
        w = simple_reflection(rs, i, w);
        changed = true;
      }
    }
  }
  return w;
}

// lambda - nu as a nonnegative integer combination of simple roots?
bool below_in_root_order(const RootSystem& rs, const Eigen::VectorXi& lambda,
                         const Eigen::VectorXi& nu) {
  RatMat at(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) at(i, j) = rs.cartan(j, i);
  RatVec rhs(rs.rank);
  for (int i = 0; i < rs.rank; ++i) rhs[i] = Rat(lambda[i] - nu[i]);
  RatVec c = at.solve(rhs);
  for (const Rat& v : c)
    if (v.denominator() != 1 || v < 0) return false;
  return true;
}

bool is_module_weight(const RootSystem& rs, const Eigen::VectorXi& lambda,
                      const Eigen::VectorXi& nu) {
  return below_in_root_order(rs, lambda, dominant_representative(rs, nu));
}

struct WeightTable {
  std::vector<Eigen::VectorXi> weights;   // sorted by (level, lex)
  std::vector<int> level;
  std::map<Eigen::VectorXi, int, VecLess> index;
  int max_level = 0;
};

WeightTable enumerate_weights(const RootSystem& rs, const Eigen::VectorXi& lambda) {
  WeightTable t;
  std::map<Eigen::VectorXi, int, VecLess> seen;
  std::vector<Eigen::VectorXi> frontier{lambda};
  seen.emplace(lambda, 0);
  int level = 0;
  while (!frontier.empty()) {
    std::vector<Eigen::VectorXi> next;
    for (const auto& nu : frontier) {
      for (int i = 0; i < rs.rank; ++i) {
        Eigen::VectorXi cand = nu - rs.cartan.row(i).transpose();
        if (seen.count(cand)) continue;
        if (!is_module_weight(rs, lambda, cand)) continue;
        seen.emplace(cand, level + 1);
        next.push_back(cand);
      }
    }
    frontier = std::move(next);
    ++level;
  }
  std::vector<std::pair<int, Eigen::VectorXi>> ordered;
  ordered.reserve(seen.size());
  for (const auto& [w, lv] : seen) ordered.emplace_back(lv, w);
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return VecLess{}(a.second, b.second);
  });
  for (const auto& [lv, w] : ordered) {
    t.index.emplace(w, static_cast<int>(t.weights.size()));
    t.weights.push_back(w);
    t.level.push_back(lv);
    t.max_level = std::max(t.max_level, lv);
  }
  return t;
}

}  // namespace

WeightMap freudenthal_multiplicities(const RootSystem& rs, const Eigen::VectorXi& lambda) {
  WeightTable table = enumerate_weights(rs, lambda);
  const Eigen::VectorXi lam_rho = lambda + rs.rho;
  const Rat top = weight_form(rs, lam_rho, lam_rho);

  std::vector<Rat> mult(table.weights.size(), Rat(0));
  WeightMap out;
  for (size_t idx = 0; idx < table.weights.size(); ++idx) {
    const Eigen::VectorXi& nu = table.weights[idx];
    if (table.level[idx] == 0) {
      mult[idx] = 1;
      out.emplace(nu, 1);
      continue;
    }
    Rat num(0);
    for (const auto& alpha : rs.positive_roots) {
      for (int k = 1;; ++k) {
        Eigen::VectorXi up = nu + k * alpha;
        auto it = table.index.find(up);
        if (it == table.index.end()) break;
        num += weight_form(rs, up, alpha) * mult[it->second];
      }
    }
    const Eigen::VectorXi nu_rho = nu + rs.rho;
    const Rat den = top - weight_form(rs, nu_rho, nu_rho);
    if (den <= 0) throw std::runtime_error("Freudenthal recursion: nonpositive denominator");
    const Rat m = 2 * num / den;
    if (m.denominator() != 1) throw std::runtime_error("Freudenthal recursion: non-integer multiplicity");
    mult[idx] = m;
    if (m > 0) out.emplace(nu, m.numerator());
  }
  return out;
}

HighestWeightModule build_module(const RootSystem& rs, const Eigen::VectorXi& lambda) {
  if (!(lambda.array() >= 0).all())
    throw std::invalid_argument("highest weight must be dominant");

  WeightTable table = enumerate_weights(rs, lambda);
  WeightMap mults = freudenthal_multiplicities(rs, lambda);

  // Global basis layout: weight spaces in table order.
  std::vector<int> offset(table.weights.size(), -1);
  std::vector<int> space_dim(table.weights.size(), 0);
  int dim = 0;
  for (size_t idx = 0; idx < table.weights.size(); ++idx) {
    auto it = mults.find(table.weights[idx]);
    space_dim[idx] = it == mults.end() ? 0 : static_cast<int>(it->second);
    offset[idx] = dim;
    dim += space_dim[idx];
  }

  HighestWeightModule mod;
  mod.dim = dim;
  mod.weight_of_basis.resize(dim);
  for (size_t idx = 0; idx < table.weights.size(); ++idx)
    for (int b = 0; b < space_dim[idx]; ++b) mod.weight_of_basis[offset[idx] + b] = table.weights[idx];
  mod.lowering.assign(rs.rank, Eigen::MatrixXd::Zero(dim, dim));

  struct Candidate {
    int simple;
    int parent;   // global basis index in V_{nu + alpha_simple}
  };

  for (int lv = 1; lv <= table.max_level; ++lv) {
    for (size_t idx = 0; idx < table.weights.size(); ++idx) {
      if (table.level[idx] != lv || space_dim[idx] == 0) continue;
      const Eigen::VectorXi& nu = table.weights[idx];

      std::vector<Candidate> cands;
      for (int i = 0; i < rs.rank; ++i) {
        Eigen::VectorXi up = nu + rs.cartan.row(i).transpose();
        auto it = table.index.find(up);
        if (it == table.index.end()) continue;
        const int pidx = it->second;
        for (int b = 0; b < space_dim[pidx]; ++b) cands.push_back({i, offset[pidx] + b});
      }
      const int nc = static_cast<int>(cands.size());
      if (nc == 0) throw std::runtime_error("weight space without raising parents");

      // Contravariant Gram of the candidate vectors F_i b_u, via
      // E_i F_j = F_j E_i + delta_ij H_i on already-built levels.
      // fe[i][c2] = F_j (E_i w) for candidate c2 = (j, w); E_i = F_i^T.
      std::vector<std::vector<Eigen::VectorXd>> fe(rs.rank, std::vector<Eigen::VectorXd>(nc));
      for (int c2 = 0; c2 < nc; ++c2) {
        const auto& [j, w] = cands[c2];
        for (int i = 0; i < rs.rank; ++i)
          fe[i][c2] = mod.lowering[j] * mod.lowering[i].row(w).transpose();
      }
      Eigen::MatrixXd gram(nc, nc);
      for (int c1 = 0; c1 < nc; ++c1) {
        const auto& [i, u] = cands[c1];
        for (int c2 = 0; c2 < nc; ++c2) {
          const auto& [j, w] = cands[c2];
          double val = fe[i][c2](u);
          if (i == j && u == w) {
            const Eigen::VectorXi up = nu + rs.cartan.row(i).transpose();
            val += static_cast<double>(up[i]);
          }
          gram(c1, c2) = val;
        }
      }

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (gram + gram.transpose()));
      const Eigen::VectorXd ev = es.eigenvalues();
      const int m = space_dim[idx];
      const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
      if (ev(nc - m) <= 1e-8 * scale)
        throw std::runtime_error("weight space rank deficient vs Freudenthal multiplicity");
      if (nc > m && std::abs(ev(nc - m - 1)) > 1e-8 * scale)
        throw std::runtime_error("weight space rank exceeds Freudenthal multiplicity");

      // Rows of C express the new orthonormal vectors in candidate coordinates.
      Eigen::MatrixXd c_rows(m, nc);
      for (int b = 0; b < m; ++b) {
        const int col = nc - m + b;
        c_rows.row(b) = es.eigenvectors().col(col).transpose() / std::sqrt(ev(col));
      }
      for (int b = 0; b < m; ++b) {
        int arg = 0;
        c_rows.row(b).cwiseAbs().maxCoeff(&arg);
        if (c_rows(b, arg) < 0) c_rows.row(b) = -c_rows.row(b);
      }

      // Coordinates of each candidate in the new basis: (C * gram) columns.
      const Eigen::MatrixXd coords = c_rows * gram;  // m x nc
      for (int c = 0; c < nc; ++c) {
        const auto& [i, u] = cands[c];
        for (int b = 0; b < m; ++b) mod.lowering[i](offset[idx] + b, u) = coords(b, c);
      }
    }
  }
  return mod;
}

Rat dynkin_index(const RootSystem& rs, const Eigen::VectorXi& lambda) {
  WeightVector lam{rs.tag, lambda};
  const Rat cas = weight_form(rs, lambda, lambda + 2 * rs.rho);
  return Rat(weyl_dimension(rs, lam)) * cas / Rat(2 * rs.dim_g);
}

std::vector<Eigen::MatrixXcd> compact_basis_action(const RootSystem& rs,
                                                   const HighestWeightModule& mod,
                                                   const Eigen::VectorXi& lambda,
                                                   bool compute_scales,
                                                   std::vector<double>* scales_out) {
  using Cplx = std::complex<double>;
  const int n = mod.dim;
  const int r = rs.rank;
  const double index = to_double(dynkin_index(rs, lambda));

  std::vector<Eigen::MatrixXcd> out;
  out.reserve(rs.dim_g);

  // Cartan directions: u_j = sum_k S(j,k) i H_k, diagonal in the weight basis.
  for (int j = 0; j < r; ++j) {
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
    for (int b = 0; b < n; ++b) {
      double h = 0;
      for (int k = 0; k < r; ++k) h += rs.cartan_orth(j, k) * mod.weight_of_basis[b][k];
      t(b, b) = Cplx(0.0, h);
    }
    out.push_back(std::move(t));
  }

  // Root vectors by iterated commutators of the simple raising operators.
  std::vector<Eigen::MatrixXd> raise(rs.positive_roots.size());
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
    const auto [si, lower_idx] = rs.root_decomposition[k];
    if (lower_idx < 0) {
      raise[k] = mod.lowering[si].transpose();
    } else {
      const Eigen::MatrixXd& a = mod.lowering[si].transpose();
      raise[k] = a * raise[lower_idx] - raise[lower_idx] * a;
    }
  }

  if (compute_scales) scales_out->clear();
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
    const Eigen::MatrixXd& e = raise[k];
    double scale;
    if (compute_scales) {
      const double nrm2 = (e.transpose() * e).trace() / index;
      if (!(nrm2 > 0)) throw std::runtime_error("degenerate root vector normalisation");
      scale = 1.0 / std::sqrt(nrm2);
      scales_out->push_back(scale);
    } else {
      scale = rs.root_scale[k];
    }
    const Eigen::MatrixXd x = scale * (e - e.transpose());
    const Eigen::MatrixXd y = scale * (e + e.transpose());
    out.push_back(x.cast<Cplx>());
    out.push_back(Cplx(0.0, 1.0) * y.cast<Cplx>());
  }
  return out;
}

}  // namespace diracmf::detail
