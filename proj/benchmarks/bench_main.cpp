#include <benchmark/benchmark.h>

#include <random>

#include "diracmf/dirac.hpp"
#include "diracmf/potential.hpp"

using namespace diracmf;

namespace {

Eigen::VectorXi coords(std::initializer_list<int> v) {
  Eigen::VectorXi c(static_cast<int>(v.size()));
  int i = 0;
  for (int x : v) c[i++] = x;
  return c;
}

void BM_RootSystemG2(benchmark::State& state) {
  for (auto _ : state) {
    RootSystem rs = build_root_system("G2");
    benchmark::DoNotOptimize(rs.f.data());
  }
}
BENCHMARK(BM_RootSystemG2);

void BM_IrrepA2(benchmark::State& state) {
  const RootSystem rs = build_root_system("A2");
  const WeightVector lam{rs.tag, coords({2, 2})};
  for (auto _ : state) {
    IrrepMatrices rep = irrep_matrices(rs, lam);
    benchmark::DoNotOptimize(rep.action.data());
  }
}
BENCHMARK(BM_IrrepA2);

void BM_DiracFamilyA2(benchmark::State& state) {
  const RootSystem rs = build_root_system("A2");
  const Calibration cal = calibrate(rs);
  const SpinorModule sm = spinor_module(rs, cal.kappa);
  const IrrepMatrices rep = irrep_matrices(rs, {rs.tag, coords({1, 1})});
  for (auto _ : state) {
    DiracFamily df = cubic_dirac(rep, sm, cal);
    benchmark::DoNotOptimize(df.d0.data());
  }
}
BENCHMARK(BM_DiracFamilyA2);

void BM_SquareIdentityBatch20(benchmark::State& state) {
  const RootSystem rs = build_root_system("A2");
  const Calibration cal = calibrate(rs);
  const DiracFamily df = cubic_dirac(irrep_matrices(rs, {rs.tag, coords({2, 1})}),
                                     spinor_module(rs, cal.kappa), cal);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-3, 3);
  std::vector<CartanVector> mus;
  for (int i = 0; i < 20; ++i) {
    Eigen::VectorXd c(2);
    c << dist(rng), dist(rng);
    mus.push_back({rs.tag, c});
  }
  for (auto _ : state) {
    auto res = square_and_link_residuals(df, mus);
    benchmark::DoNotOptimize(res.square.data());
  }
}
BENCHMARK(BM_SquareIdentityBatch20);

void BM_SmallestSingularValueA1(benchmark::State& state) {
  const RootSystem rs = build_root_system("A1");
  const Calibration cal = calibrate(rs);
  const DiracFamily df = cubic_dirac(irrep_matrices(rs, {rs.tag, coords({5})}),
                                     spinor_module(rs, cal.kappa), cal);
  const CartanVector mu{rs.tag, Eigen::VectorXd::Constant(1, 1.7)};
  for (auto _ : state) benchmark::DoNotOptimize(smallest_singular_value(df, mu));
}
BENCHMARK(BM_SmallestSingularValueA1);

void BM_VerlindeB2Level6(benchmark::State& state) {
  const RootSystem rs = build_root_system("B2");
  for (auto _ : state) {
    VerlindeData vd = verlinde_classes_simple(rs, 6);
    benchmark::DoNotOptimize(vd.points.data());
  }
}
BENCHMARK(BM_VerlindeB2Level6);

void BM_SheetCriticalPointRank3(benchmark::State& state) {
  RatMat b(3, 3);
  const long long rows[3][3] = {{4, 1, 0}, {1, 6, -2}, {0, -2, 8}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = Rat(rows[i][j]);
  const PotentialSheet sheet = make_sheet({3, -1, 2}, b);
  for (auto _ : state) {
    RatVec crit = sheet_critical_point(sheet);
    benchmark::DoNotOptimize(crit.data());
  }
}
BENCHMARK(BM_SheetCriticalPointRank3);

}  // namespace

BENCHMARK_MAIN();
