#include "diracmf/potential.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace diracmf {
namespace {

void validate_form(const RatMat& b, int rank) {
  if (b.rows() != rank || b.cols() != rank)
    throw std::invalid_argument("form has wrong rank");
  if (!b.symmetric()) throw std::invalid_argument("form must be symmetric");
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (b(i, j).denominator() != 1)
        throw std::invalid_argument("form must be integral on the lattice");
  for (int i = 0; i < rank; ++i)
    if (b(i, i).numerator() % 2 != 0)
      throw std::invalid_argument("form must be even: B(p,p) in 2Z for lattice vectors");
  if (!b.positive_definite()) throw std::invalid_argument("form must be positive definite");
}

RatVec to_ratvec(const std::vector<long long>& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

RatVec mod_lattice(RatVec v) {
  for (auto& c : v) {
    const std::int64_t fl = c.numerator() >= 0 ? c.numerator() / c.denominator()
                                               : -((-c.numerator() + c.denominator() - 1) / c.denominator());
    c -= fl;
  }
  return v;
}

}  // namespace

PotentialSheet make_sheet(std::vector<long long> lambda, RatMat form) {
  PotentialSheet s;
  s.rank = static_cast<int>(lambda.size());
  validate_form(form, s.rank);
  s.lambda = std::move(lambda);
  s.form = std::move(form);
  return s;
}

Rat torus_sheet_potential(const PotentialSheet& sheet, const RatVec& mu) {
  if (static_cast<int>(mu.size()) != sheet.rank)
    throw std::invalid_argument("torus_sheet_potential: dimension mismatch");
  return -dot(to_ratvec(sheet.lambda), mu) + form_value(sheet.form, mu, mu) / 2;
}

double torus_sheet_potential(const PotentialSheet& sheet, const Eigen::VectorXd& mu) {
  if (mu.size() != sheet.rank)
    throw std::invalid_argument("torus_sheet_potential: dimension mismatch");
  double lin = 0, quad = 0;
  for (int i = 0; i < sheet.rank; ++i) {
    lin += static_cast<double>(sheet.lambda[i]) * mu[i];
    for (int j = 0; j < sheet.rank; ++j) quad += mu[i] * to_double(sheet.form(i, j)) * mu[j];
  }
  return -lin + quad / 2;
}

RatVec sheet_gradient(const PotentialSheet& sheet, const RatVec& mu) {
  if (static_cast<int>(mu.size()) != sheet.rank)
    throw std::invalid_argument("sheet_gradient: dimension mismatch");
  RatVec g = sheet.form * mu;
  for (int i = 0; i < sheet.rank; ++i) g[i] -= Rat(sheet.lambda[i]);
  return g;
}

RatVec sheet_critical_point(const PotentialSheet& sheet) {
  return sheet.form.solve(to_ratvec(sheet.lambda));
}

Rat sheet_critical_value(const PotentialSheet& sheet) {
  const RatVec cp = sheet_critical_point(sheet);
  return -form_value(sheet.form, cp, cp) / 2;
}

long long translation_descent_check(const PotentialSheet& sheet, const std::vector<long long>& p,
                                    const RatVec& mu) {
  if (static_cast<int>(p.size()) != sheet.rank || static_cast<int>(mu.size()) != sheet.rank)
    throw std::invalid_argument("translation_descent_check: dimension mismatch");
  const RatVec pr = to_ratvec(p);
  const RatVec bp = sheet.form * pr;
  std::vector<long long> shifted = sheet.lambda;
  for (int i = 0; i < sheet.rank; ++i) {
    if (bp[i].denominator() != 1)
      throw std::invalid_argument("translation_descent_check: p is not a lattice vector for B");
    shifted[i] += bp[i].numerator();
  }
  const PotentialSheet relabeled = make_sheet(shifted, sheet.form);
  RatVec mu_shift = mu;
  for (int i = 0; i < sheet.rank; ++i) mu_shift[i] += pr[i];
  const Rat diff = torus_sheet_potential(relabeled, mu_shift) - torus_sheet_potential(sheet, mu);
  if (diff.denominator() != 1)
    throw std::runtime_error("translation descent produced a non-integer shift");
  return diff.numerator();
}

Eigen::MatrixXcd lie_potential_operator(const IrrepMatrices& rep, const CartanVector& mu) {
  return lie_potential_on_module(cartan_action(rep, mu), norm_sq(rep.rs, mu));
}

Eigen::MatrixXcd lie_potential_on_module(const Eigen::MatrixXcd& action, double mu_norm_sq) {
  return std::complex<double>(0, -1) * action +
         (mu_norm_sq / 2) * Eigen::MatrixXcd::Identity(action.rows(), action.cols());
}

SmithNormalForm smith_normal_form(LatticeMat g) {
  const int n = static_cast<int>(g.rows());
  SmithNormalForm s;
  s.u = LatticeMat::Identity(n, n);
  s.v = LatticeMat::Identity(n, n);
  s.d = std::move(g);

  for (int k = 0; k < n; ++k) {
    for (;;) {
      // move the smallest nonzero entry of the trailing block to (k,k)
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j)
          if (s.d(i, j) != 0 && (pi < 0 || std::abs(s.d(i, j)) < best)) {
            best = std::abs(s.d(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) break;   // trailing block is zero
      if (pi != k) {
        s.d.row(pi).swap(s.d.row(k));
        s.u.row(pi).swap(s.u.row(k));
      }
      if (pj != k) {
        s.d.col(pj).swap(s.d.col(k));
        s.v.col(pj).swap(s.v.col(k));
      }
      bool clean = true;
      for (int i = k + 1; i < n; ++i) {
        const long long q = s.d(i, k) / s.d(k, k);
        if (q != 0) {
          s.d.row(i) -= q * s.d.row(k);
          s.u.row(i) -= q * s.u.row(k);
        }
        if (s.d(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < n; ++j) {
        const long long q = s.d(k, j) / s.d(k, k);
        if (q != 0) {
          s.d.col(j) -= q * s.d.col(k);
          s.v.col(j) -= q * s.v.col(k);
        }
        if (s.d(k, j) != 0) clean = false;
      }
      if (clean) {
        // divisibility: fold any non-divisible entry into column k and retry
        bool divides = true;
        for (int i = k + 1; i < n && divides; ++i)
          for (int j = k + 1; j < n && divides; ++j)
            if (s.d(i, j) % s.d(k, k) != 0) {
              s.d.col(k) += s.d.col(j);
              s.v.col(k) += s.v.col(j);
              divides = false;
            }
        if (divides) break;
      }
    }
    if (s.d(k, k) < 0) {
      s.d.row(k) = -s.d.row(k);
      s.u.row(k) = -s.u.row(k);
    }
  }
  return s;
}

VerlindeData verlinde_kernel_points(int rank, const RatMat& form) {
  validate_form(form, rank);
  VerlindeData vd;
  vd.tag = "T" + std::to_string(rank);
  vd.rank = rank;
  vd.form = form;

  LatticeMat g(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = form(i, j).numerator();

  const SmithNormalForm snf = smith_normal_form(g);
  long long det = 1;
  for (int i = 0; i < rank; ++i) det *= snf.d(i, i);
  vd.det = det;

  // Z^r / g Z^r = { u^-1 k : k_i in [0, d_i) };  kernel point = g^-1 z mod Z^r.
  RatMat uinv(rank, rank);
  {
    LatticeMat u = snf.u;
    RatMat ur(rank, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) ur(i, j) = Rat(u(i, j));
    uinv = ur.inverse();
  }
  const RatMat ginv = form.inverse();

  std::set<RatVec, RatVecLess> pts;
  std::vector<long long> idx(rank, 0);
  for (;;) {
    RatVec z(rank, Rat(0));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) z[i] += uinv(i, j) * Rat(idx[j]);
    pts.insert(mod_lattice(ginv * z));

    int c = 0;
    while (c < rank && ++idx[c] == snf.d(c, c)) idx[c++] = 0;
    if (c == rank) break;
  }
  if (static_cast<long long>(pts.size()) != det)
    throw std::runtime_error("kernel enumeration count disagrees with det(B)");
  for (auto& p : pts) vd.points.push_back({p, true, -1});
  for (size_t i = 0; i < vd.points.size(); ++i) {
    vd.points[i].orbit = static_cast<int>(i);
    vd.representatives.push_back(static_cast<int>(i));
  }
  compute_ribbon_phases(vd);
  return vd;
}

VerlindeData verlinde_classes_simple(const RootSystem& rs, int level) {
  if (rs.is_torus())
    throw std::invalid_argument("verlinde_classes_simple requires a simple group");
  if (level < 1) throw std::invalid_argument("level must be >= 1");

  const RatMat b = rs.gram_coroots.scaled(Rat(level + rs.dual_coxeter));
  VerlindeData vd = verlinde_kernel_points(rs.rank, b);
  vd.tag = rs.tag.str();
  vd.level = level;

  // Group points into Weyl orbits acting mod the coroot lattice.
  std::map<RatVec, int, RatVecLess> index;
  for (size_t i = 0; i < vd.points.size(); ++i) index.emplace(vd.points[i].coords, static_cast<int>(i));
  const long long w_order = weyl_order(rs);

  for (auto& p : vd.points) p.orbit = -1;
  vd.representatives.clear();
  int next_orbit = 0;
  for (size_t i = 0; i < vd.points.size(); ++i) {
    if (vd.points[i].orbit >= 0) continue;
    std::set<RatVec, RatVecLess> orbit;
    std::vector<RatVec> frontier{vd.points[i].coords};
    orbit.insert(vd.points[i].coords);
    while (!frontier.empty()) {
      std::vector<RatVec> next;
      for (const auto& x : frontier)
        for (int k = 0; k < rs.rank; ++k) {
          RatVec y = mod_lattice(simple_reflection_cartan(rs, k, x));
          if (orbit.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    const bool regular = static_cast<long long>(orbit.size()) == w_order;
    for (const auto& x : orbit) {
      auto it = index.find(x);
      if (it == index.end()) throw std::runtime_error("Weyl orbit left the kernel set");
      vd.points[it->second].orbit = next_orbit;
      vd.points[it->second].regular = regular;
    }
    if (regular) vd.representatives.push_back(static_cast<int>(i));
    ++next_orbit;
  }
  compute_ribbon_phases(vd);
  return vd;
}

void compute_ribbon_phases(VerlindeData& vd) {
  vd.critical_values.clear();
  vd.phases.clear();
  vd.phases_vacuum.clear();
  vd.vacuum = -1;

  Rat best_norm(0);
  for (size_t r = 0; r < vd.representatives.size(); ++r) {
    const RatVec& mu = vd.points[vd.representatives[r]].coords;
    const Rat nrm = form_value(vd.form, mu, mu);
    vd.critical_values.push_back(-nrm / 2);
    if (vd.vacuum < 0 || nrm < best_norm) {
      vd.vacuum = static_cast<int>(r);
      best_norm = nrm;
    }
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (size_t r = 0; r < vd.critical_values.size(); ++r) {
    const double w = to_double(vd.critical_values[r]);
    vd.phases.push_back({std::cos(two_pi * w), std::sin(two_pi * w)});
    const double dw = to_double(vd.critical_values[r] - vd.critical_values[vd.vacuum]);
    vd.phases_vacuum.push_back({std::cos(two_pi * dw), std::sin(two_pi * dw)});
  }
}

nlohmann::ordered_json verlinde_json(const VerlindeData& vd) {
  nlohmann::ordered_json j;
  j["tag"] = vd.tag;
  j["rank"] = vd.rank;
  if (vd.level > 0) j["level"] = vd.level;
  nlohmann::ordered_json form = nlohmann::ordered_json::array();
  for (int i = 0; i < vd.form.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < vd.form.cols(); ++k) row.push_back(rat_str(vd.form(i, k)));
    form.push_back(row);
  }
  j["form"] = form;
  j["kernel_count"] = vd.det;

  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const auto& p : vd.points) {
    nlohmann::ordered_json e;
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const auto& c : p.coords) coords.push_back(rat_str(c));
    e["coords"] = coords;
    e["regular"] = p.regular;
    e["orbit"] = p.orbit;
    pts.push_back(e);
  }
  j["points"] = pts;

  // optional rescaled column: critical values times the smallest integer
  // clearing every denominator (reported, never applied)
  long long rescale = 1;
  for (const Rat& w : vd.critical_values)
    rescale = std::lcm(rescale, w.denominator());

  nlohmann::ordered_json reps = nlohmann::ordered_json::array();
  for (size_t r = 0; r < vd.representatives.size(); ++r) {
    nlohmann::ordered_json e;
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const auto& c : vd.points[vd.representatives[r]].coords) coords.push_back(rat_str(c));
    e["coords"] = coords;
    e["critical_value"] = rat_str(vd.critical_values[r]);
    e["critical_value_rescaled"] = (vd.critical_values[r] * Rat(rescale)).numerator();
    e["phase"] = {{"re", vd.phases[r].real()}, {"im", vd.phases[r].imag()}};
    e["phase_vacuum_normalized"] = {{"re", vd.phases_vacuum[r].real()},
                                    {"im", vd.phases_vacuum[r].imag()}};
    reps.push_back(e);
  }
  j["representatives"] = reps;
  j["rescale_factor"] = rescale;
  j["representative_count"] = vd.representatives.size();
  j["vacuum_representative"] = vd.vacuum;
  return j;
}

}  // namespace diracmf
