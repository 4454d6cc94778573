#include "cli_app.hpp"

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <random>
#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "diracmf/dirac.hpp"
#include "diracmf/loop.hpp"
#include "diracmf/potential.hpp"
#include "diracmf/report.hpp"

namespace diracmf {
namespace {

using Cplx = std::complex<double>;
using Json = nlohmann::ordered_json;

Eigen::VectorXi parse_weight(const std::string& text, int rank) {
  std::vector<int> vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
  if (static_cast<int>(vals.size()) != rank)
    throw CLI::ValidationError("--weight", "expected " + std::to_string(rank) + " coordinates");
  Eigen::VectorXi w(rank);
  for (int i = 0; i < rank; ++i) w[i] = vals[i];
  return w;
}

RatVec parse_rationals(const std::string& text) {
  RatVec vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) vals.push_back(rat_parse(tok));
  return vals;
}

RatMat parse_form(const std::string& text) {
  std::vector<RatVec> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_rationals(row));
  const int n = static_cast<int>(rows.size());
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw CLI::ValidationError("--form", "matrix must be square (rows separated by ';')");
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Json vec_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json ratvec_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rat_str(r));
  return a;
}

CartanVector random_cartan(const RootSystem& rs, std::mt19937_64& rng, double bound) {
  std::uniform_real_distribution<double> dist(-bound, bound);
  for (;;) {
    Eigen::VectorXd c(rs.rank);
    for (int i = 0; i < rs.rank; ++i) c[i] = dist(rng);
    CartanVector mu{rs.tag, c};
    if (norm_sq(rs, mu) <= bound * bound) return mu;
  }
}

struct Context {
  std::string output;
  bool quiet = false;
};

int finish(const Context& ctx, RunReport& report, const std::string& summary) {
  report.timestamp = iso8601_now();
  std::printf("%s  [%s]\n", summary.c_str(), report.pass ? "PASS" : "FAIL");
  if (!ctx.output.empty()) {
    emit_report(report, ctx.output);
    if (!ctx.quiet) std::printf("report written to %s\n", ctx.output.c_str());
  }
  return report.pass ? 0 : 1;
}

// ---- subcommand payloads ---------------------------------------------------

int run_verify_square(const Context& ctx, const std::string& group, const std::string& weight,
                      int samples, double mu_bound, double tol, std::uint64_t seed) {
  const RootSystem rs = build_root_system(group);
  const Calibration cal = calibrate(rs);
  const WeightVector lam{rs.tag, weight.empty() ? Eigen::VectorXi::Zero(rs.rank)
                                                : parse_weight(weight, rs.rank)};
  const auto rep = irrep_matrices(rs, lam);
  const DiracFamily df = cubic_dirac(rep, spinor_module(rs, cal.kappa), cal);

  RunReport report;
  report.config = {{"command", "verify-square"},
                   {"group", group},
                   {"weight", std::vector<int>(lam.coords.begin(), lam.coords.end())},
                   {"samples", samples},
                   {"mu_bound", mu_bound},
                   {"tolerance", tol},
                   {"seed", seed},
                   {"root_system", root_system_json(rs)},
                   {"calibration", calibration_json(cal)}};

  std::mt19937_64 rng(seed);
  double worst = 0;
  std::vector<CartanVector> probes{CartanVector{rs.tag, Eigen::VectorXd::Zero(rs.rank)}};
  for (int i = 1; i < samples; ++i) probes.push_back(random_cartan(rs, rng, mu_bound));
  const SquareLinkResiduals res = square_and_link_residuals(df, probes);
  for (size_t i = 0; i < probes.size(); ++i) {
    worst = std::max(worst, res.square[i]);
    report.results.push_back({{"mu", vec_json(probes[i].coords)}, {"residual", res.square[i]}});
  }
  report.residuals = {{"max_residual", worst},
                      {"max_curvature_link_residual",
                       *std::max_element(res.link.begin(), res.link.end())}};
  report.pass = worst <= tol;

  char buf[160];
  std::snprintf(buf, sizeof(buf), "verify-square %s weight=%s dim=%d: max residual %.3e over %d samples",
                group.c_str(), weight.empty() ? "0" : weight.c_str(), df.total_dim, worst, samples);
  return finish(ctx, report, buf);
}

int run_scan_kernel(const Context& ctx, const std::string& group, const std::string& weight,
                    double start, double stop, int count, double threshold) {
  const RootSystem rs = build_root_system(group);
  const Calibration cal = calibrate(rs);
  const WeightVector lam{rs.tag, weight.empty() ? Eigen::VectorXi::Zero(rs.rank)
                                                : parse_weight(weight, rs.rank)};
  const auto rep = irrep_matrices(rs, lam);
  const DiracFamily df = cubic_dirac(rep, spinor_module(rs, cal.kappa), cal);

  // default ray: first coroot direction, normalised in the basic form
  Eigen::VectorXd rc = Eigen::VectorXd::Zero(rs.rank);
  rc[0] = 1.0;
  CartanVector ray{rs.tag, rc};
  ray.coords /= std::sqrt(norm_sq(rs, ray));

  std::vector<double> grid;
  for (int i = 0; i < count; ++i) grid.push_back(start + (stop - start) * i / (count - 1));
  const KernelScan scan = kernel_locus_scan(df, ray, grid);

  // analytic prediction: minimiser of the distance to the kernel orbit
  double s_pred = scan.refined_s, d_pred = 1e300;
  for (double s = start; s <= stop; s += (stop - start) / 2000) {
    const double d = kernel_orbit_distance(df, CartanVector{rs.tag, s * ray.coords});
    if (d < d_pred) {
      d_pred = d;
      s_pred = s;
    }
  }
  for (int round = 0; round < 10; ++round) {
    const double step = (stop - start) / 2000 / std::pow(10, round);
    for (int k = -10; k <= 10; ++k) {
      const double s = s_pred + k * step / 10;
      if (s <= 0) continue;
      const double d = kernel_orbit_distance(df, CartanVector{rs.tag, s * ray.coords});
      if (d < d_pred) {
        d_pred = d;
        s_pred = s;
      }
    }
  }

  RunReport report;
  report.config = {{"command", "scan-kernel"},
                   {"group", group},
                   {"weight", std::vector<int>(lam.coords.begin(), lam.coords.end())},
                   {"grid", {{"start", start}, {"stop", stop}, {"count", count}}},
                   {"threshold", threshold},
                   {"ray", vec_json(ray.coords)}};
  for (size_t i = 0; i < scan.s.size(); ++i)
    report.results.push_back({{"s", scan.s[i]}, {"sigma_min", scan.sigma_min[i]}});
  report.residuals = {{"refined_s", scan.refined_s},
                      {"refined_sigma", scan.refined_sigma},
                      {"predicted_s", s_pred},
                      {"predicted_orbit_distance", d_pred}};
  const bool ray_hits_orbit = d_pred <= 1e-6;
  report.pass = !ray_hits_orbit ||
                (scan.refined_sigma < threshold && std::abs(scan.refined_s - s_pred) <= 1e-3);

  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "scan-kernel %s weight=%s: min sigma %.3e at s=%.6f (predicted %.6f)",
                group.c_str(), weight.empty() ? "0" : weight.c_str(), scan.refined_sigma,
                scan.refined_s, s_pred);
  return finish(ctx, report, buf);
}

int run_vanishing(const Context& ctx, const std::string& group, const std::string& weight,
                  int max_dim) {
  const RootSystem rs = build_root_system(group);
  const Calibration cal = calibrate(rs);
  const SpinorModule sm = spinor_module(rs, cal.kappa);
  const CartanVector zero{rs.tag, Eigen::VectorXd::Zero(rs.rank)};

  std::vector<WeightVector> sweep;
  if (!weight.empty()) sweep.push_back({rs.tag, parse_weight(weight, rs.rank)});
  else sweep = dominant_weights_up_to_dim(rs, max_dim);

  RunReport report;
  report.config = {{"command", "vanishing"},
                   {"group", group},
                   {"max_dim", max_dim},
                   {"calibration", calibration_json(cal)}};
  bool all = true;
  double worst = 0;
  for (const auto& lam : sweep) {
    const auto rep = irrep_matrices(rs, lam);
    const auto cert = vanishing_certificate(rep, cubic_dirac(rep, sm, cal), zero);
    all = all && cert.pass;
    worst = std::max(worst, cert.scalar_residual);
    report.results.push_back({{"lambda", std::vector<int>(lam.coords.begin(), lam.coords.end())},
                              {"value", cert.value},
                              {"expected", cert.expected},
                              {"scalar_residual", cert.scalar_residual},
                              {"pass", cert.pass}});
  }
  report.residuals = {{"max_scalar_residual", worst}};
  report.pass = all;

  char buf[160];
  std::snprintf(buf, sizeof(buf), "vanishing %s: %zu modules, all D0^2 scalar and negative",
                group.c_str(), sweep.size());
  return finish(ctx, report, buf);
}

int run_verlinde(const Context& ctx, const std::string& group, int level, int rank,
                 const std::string& form_text) {
  RunReport report;
  VerlindeData vd;
  if (!group.empty()) {
    const RootSystem rs = build_root_system(group);
    vd = verlinde_classes_simple(rs, level);
    report.config = {{"command", "verlinde"}, {"group", group}, {"level", level}};
  } else {
    if (form_text.empty()) throw CLI::ValidationError("--form", "required without --group");
    vd = verlinde_kernel_points(rank, parse_form(form_text));
    report.config = {{"command", "verlinde"}, {"rank", rank}, {"form", form_text}};
  }
  report.results.push_back(verlinde_json(vd));
  report.residuals = {{"kernel_count", vd.det},
                      {"representative_count", vd.representatives.size()}};
  report.pass = static_cast<long long>(vd.points.size()) == vd.det;

  char buf[160];
  std::snprintf(buf, sizeof(buf), "verlinde %s: %lld kernel points, %zu representatives",
                group.empty() ? ("rank " + std::to_string(rank)).c_str() : group.c_str(), vd.det,
                vd.representatives.size());
  return finish(ctx, report, buf);
}

int run_torus_potential(const Context& ctx, int rank, const std::string& form_text,
                        const std::string& sheet_text, const std::string& mu_text,
                        const std::string& translate_text) {
  const RatMat b = parse_form(form_text);
  std::vector<long long> lambda(rank, 0);
  if (!sheet_text.empty()) {
    const RatVec parsed = parse_rationals(sheet_text);
    if (static_cast<int>(parsed.size()) != rank)
      throw CLI::ValidationError("--sheet", "expected " + std::to_string(rank) + " integers");
    for (int i = 0; i < rank; ++i) {
      if (parsed[i].denominator() != 1)
        throw CLI::ValidationError("--sheet", "sheet label must be integral");
      lambda[i] = parsed[i].numerator();
    }
  }
  const PotentialSheet sheet = make_sheet(lambda, b);
  const RatVec crit = sheet_critical_point(sheet);

  RunReport report;
  report.config = {{"command", "torus-potential"},
                   {"rank", rank},
                   {"form", form_text},
                   {"sheet", sheet_text.empty() ? "0" : sheet_text}};
  Json entry;
  entry["critical_point"] = ratvec_json(crit);
  entry["critical_value"] = rat_str(sheet_critical_value(sheet));
  bool pass = true;
  for (const Rat& g : sheet_gradient(sheet, crit)) pass = pass && g == Rat(0);
  if (!mu_text.empty()) {
    const RatVec mu = parse_rationals(mu_text);
    entry["mu"] = ratvec_json(mu);
    entry["value"] = rat_str(torus_sheet_potential(sheet, mu));
    if (!translate_text.empty()) {
      const RatVec pr = parse_rationals(translate_text);
      std::vector<long long> p(rank);
      for (int i = 0; i < rank; ++i) {
        if (pr[i].denominator() != 1)
          throw CLI::ValidationError("--translate", "lattice vector must be integral");
        p[i] = pr[i].numerator();
      }
      entry["descent_shift"] = translation_descent_check(sheet, p, mu);
    }
  }
  report.results.push_back(entry);
  report.residuals = Json::object();
  report.pass = pass;

  return finish(ctx, report, "torus-potential rank " + std::to_string(rank) +
                                  ": critical value " + rat_str(sheet_critical_value(sheet)));
}

int run_cocycle(const Context& ctx, const std::string& group, int m_trunc, int samples,
                const std::string& mu_text, std::uint64_t seed) {
  const RootSystem rs = build_root_system(group);
  std::mt19937_64 rng(seed);
  const int q = 4 * m_trunc + 8;

  // action-law property over the Cartan model
  std::uniform_real_distribution<double> dist(-1, 1);
  auto random_cartan_loop = [&]() {
    Eigen::MatrixXcd modes = Eigen::MatrixXcd::Zero(rs.rank, 2 * m_trunc + 1);
    for (int n = 0; n <= m_trunc; ++n)
      for (int i = 0; i < rs.rank; ++i) {
        const Cplx c(dist(rng), n == 0 ? 0.0 : dist(rng));
        modes(i, n + m_trunc) = c;
        modes(i, -n + m_trunc) = std::conj(c);
      }
    return cartan_loop(rs, modes);
  };
  double worst = 0;
  for (int trial = 0; trial < samples; ++trial) {
    const PathElement g1 = cartan_path(rs, random_cartan(rs, rng, 1.0));
    const PathElement g2 = cartan_path(rs, random_cartan(rs, rng, 1.0));
    ExtendedLoopVector v{Cplx(0, dist(rng)), random_cartan_loop()};
    const auto stepwise = loop_action(rs, g1, loop_action(rs, g2, v, q).value, q);
    const auto direct = loop_action(rs, compose(g1, g2), v, q);
    const double r = std::abs(stepwise.value.central - direct.value.central) +
                     (stepwise.value.loop.modes - direct.value.loop.modes).cwiseAbs().maxCoeff();
    worst = std::max(worst, r);
  }

  RunReport report;
  report.config = {{"command", "cocycle"},
                   {"group", group},
                   {"truncation_M", m_trunc},
                   {"quadrature", q},
                   {"samples", samples},
                   {"seed", seed}};
  report.residuals = {{"action_law_residual", worst}};
  bool pass = worst <= 1e-8;

  if (!mu_text.empty()) {
    const RatVec mu = parse_rationals(mu_text);
    const auto val = local_superpotential(rs, mu);
    Json entry;
    entry["mu"] = ratvec_json(mu);
    entry["central_value"] = {{"re", val.central.real()}, {"im", val.central.imag()}};
    entry["w_value"] = rat_str(*val.exact_value);
    entry["lie_part"] = vec_json(val.lie_part);
    entry["truncation_M"] = m_trunc;
    entry["residuals"] = {{"quadrature", val.quadrature_residual}};
    // cross-module check against the vacuum sheet of the coroot-lattice form
    bool consistent = true;
    bool checked = false;
    if (rs.is_simple()) {
      RatMat b(rs.rank, rs.rank);
      for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) b(i, j) = rs.gram_coroots(i, j);
      const PotentialSheet vacuum = make_sheet(std::vector<long long>(rs.rank, 0), b);
      consistent = torus_sheet_potential(vacuum, mu) == *val.exact_value;
      checked = true;
    }
    entry["vacuum_sheet_consistent"] = checked ? Json(consistent) : Json(nullptr);
    report.results.push_back(entry);
    pass = pass && consistent;
  }
  report.pass = pass;

  char buf[160];
  std::snprintf(buf, sizeof(buf), "cocycle %s M=%d: action-law residual %.3e over %d samples",
                group.c_str(), m_trunc, worst, samples);
  return finish(ctx, report, buf);
}

int run_calibrate(const Context& ctx, const std::string& group) {
  const RootSystem rs = build_root_system(group);
  const Calibration cal = calibrate(rs);
  RunReport report;
  report.config = {{"command", "calibrate"}, {"group", group}};
  report.results.push_back(calibration_json(cal));
  report.residuals = {{"residual", cal.residual}};
  report.pass = cal.candidates_passed == 1;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "calibrate %s: kappa=%+d c3=%s t=%+d (unique of 16)",
                group.c_str(), cal.kappa, rat_str(cal.cubic_coeff).c_str(), cal.t_sign);
  return finish(ctx, report, buf);
}

}  // namespace

namespace {

// Flat key=value config support: inject "--key value" for every file entry
// whose flag is absent from the explicit arguments, so flags win.
std::vector<std::string> apply_config_file(const std::vector<std::string>& args) {
  std::string path;
  std::vector<std::string> out;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ValidationError("--config", "missing file path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--config", "expected key=value, got \"" + line + "\"");
    const std::string flag = "--" + line.substr(0, eq);
    bool given = false;
    for (const auto& a : out) given = given || a == flag || a.rfind(flag + "=", 0) == 0;
    if (!given) {
      out.push_back(flag);
      out.push_back(line.substr(eq + 1));
    }
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"finite-dimensional Dirac families, super-potentials and Verlinde data for compact groups"};
  app.require_subcommand(1);
  app.footer("Any subcommand also accepts --config FILE with flat key=value lines\n"
             "mirroring its flags; explicit flags win over the file.");
  app.fallthrough(false);

  Context ctx;
  std::string group, weight, form_text, sheet_text, mu_text, translate_text;
  int samples = 20, level = 1, rank = 1, max_dim = 50, m_trunc = 8;
  int grid_count = 120;
  double mu_bound = 10.0, tol = 1e-9, grid_start = 0.05, grid_stop = 6.0, threshold = 1e-8;
  std::uint64_t seed = 12345;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", ctx.output, "write the JSON report here");
  };

  auto* vs = app.add_subcommand("verify-square", "check the Dirac square identity on random mu");
  vs->add_option("--group", group, "group tag (A1, A2, A3, B2, G2)")->required();
  vs->add_option("--weight", weight, "highest weight, comma separated");
  vs->add_option("--samples", samples)->check(CLI::PositiveNumber);
  vs->add_option("--mu-bound", mu_bound)->check(CLI::PositiveNumber);
  vs->add_option("--tol", tol)->check(CLI::PositiveNumber);
  vs->add_option("--seed", seed);
  add_common(vs);

  auto* sk = app.add_subcommand("scan-kernel", "smallest singular value along a Cartan ray");
  sk->add_option("--group", group)->required();
  sk->add_option("--weight", weight);
  sk->add_option("--grid-start", grid_start)->check(CLI::PositiveNumber);
  sk->add_option("--grid-stop", grid_stop)->check(CLI::PositiveNumber);
  sk->add_option("--grid-count", grid_count)->check(CLI::Range(2, 1000000));
  sk->add_option("--threshold", threshold)->check(CLI::PositiveNumber);
  add_common(sk);

  auto* va = app.add_subcommand("vanishing", "scalar negative D0^2 certificates");
  va->add_option("--group", group)->required();
  va->add_option("--weight", weight);
  va->add_option("--max-dim", max_dim)->check(CLI::PositiveNumber);
  add_common(va);

  auto* ve = app.add_subcommand("verlinde", "kernel points of the level isogeny");
  ve->add_option("--group", group);
  ve->add_option("--level", level)->check(CLI::PositiveNumber);
  ve->add_option("--rank", rank)->check(CLI::Range(1, 4));
  ve->add_option("--form", form_text, "even integral form, rows ';'-separated");
  add_common(ve);

  auto* tp = app.add_subcommand("torus-potential", "sheet potential and critical data");
  tp->add_option("--rank", rank)->required()->check(CLI::Range(1, 4));
  tp->add_option("--form", form_text)->required();
  tp->add_option("--sheet", sheet_text, "integral sheet label, default 0");
  tp->add_option("--mu", mu_text, "rational evaluation point, e.g. 1/2,3");
  tp->add_option("--translate", translate_text, "integral lattice vector for the descent check");
  add_common(tp);

  auto* co = app.add_subcommand("cocycle", "loop-algebra action law and local super-potential");
  co->add_option("--group", group)->required();
  co->add_option("--m-trunc", m_trunc)->check(CLI::PositiveNumber);
  co->add_option("--samples", samples)->check(CLI::PositiveNumber);
  co->add_option("--mu", mu_text, "rational Cartan point for the local value");
  co->add_option("--seed", seed);
  add_common(co);

  auto* ca = app.add_subcommand("calibrate", "pin the Clifford/cubic/T-sign convention");
  ca->add_option("--group", group)->required();
  add_common(ca);

  auto* all = app.add_subcommand("all", "run every applicable verification for one group");
  all->add_option("--group", group)->required();
  all->add_option("--weight", weight);
  all->add_option("--level", level)->check(CLI::PositiveNumber);
  all->add_option("--samples", samples)->check(CLI::PositiveNumber);
  all->add_option("--seed", seed);
  add_common(all);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = apply_config_file(args);
    std::reverse(args.begin(), args.end());   // CLI11 consumes back to front
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (vs->parsed()) return run_verify_square(ctx, group, weight, samples, mu_bound, tol, seed);
    if (sk->parsed())
      return run_scan_kernel(ctx, group, weight, grid_start, grid_stop, grid_count, threshold);
    if (va->parsed()) return run_vanishing(ctx, group, weight, max_dim);
    if (ve->parsed()) return run_verlinde(ctx, group, level, rank, form_text);
    if (tp->parsed())
      return run_torus_potential(ctx, rank, form_text, sheet_text, mu_text, translate_text);
    if (co->parsed()) return run_cocycle(ctx, group, m_trunc, samples, mu_text, seed);
    if (ca->parsed()) return run_calibrate(ctx, group);
    if (all->parsed()) {
      const std::string out = ctx.output;
      Context sub_ctx;   // subcommands print; only the combined pass matters
      int rc = 0;
      rc |= run_calibrate(sub_ctx, group);
      rc |= run_verify_square(sub_ctx, group, weight, samples, 10.0, 1e-9, seed);
      rc |= run_scan_kernel(sub_ctx, group, weight, 0.05, 6.0, 120, 1e-8);
      rc |= run_vanishing(sub_ctx, group, "", 50);
      rc |= run_verlinde(sub_ctx, group, level, 1, "");
      rc |= run_cocycle(sub_ctx, group, 8, samples, "", seed);
      RunReport combined;
      combined.config = {{"command", "all"}, {"group", group}};
      combined.residuals = Json::object();
      combined.pass = rc == 0;
      Context all_ctx;
      all_ctx.output = out;
      return finish(all_ctx, combined, "all " + group);
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}

}  // namespace diracmf
