#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <numbers>
#include <random>

#include "diracmf/potential.hpp"

using namespace diracmf;

namespace {

RatMat int_form(std::initializer_list<std::initializer_list<long long>> rows) {
  const int n = static_cast<int>(rows.size());
  RatMat m(n, n);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long long v : row) m(i, j++) = Rat(v);
    ++i;
  }
  return m;
}

// Random even positive-definite integral form R^T diag(2 d) R with small
// invertible R; determinant kept small so the brute-force oracle stays cheap.
RatMat random_even_form(int rank, std::mt19937_64& rng, long long max_det = 50) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> diag(1, 3);
  for (;;) {
    LatticeMat r(rank, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) r(i, j) = entry(rng);
    LatticeMat d = LatticeMat::Zero(rank, rank);
    for (int i = 0; i < rank; ++i) d(i, i) = 2 * diag(rng);
    const LatticeMat b = r.transpose() * d * r;
    RatMat out(rank, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) out(i, j) = Rat(b(i, j));
    const Rat det = out.det();
    if (det > Rat(0) && det <= Rat(max_det)) return out;
  }
}

// Independent oracle: cofactor determinant plus brute-force enumeration of
// kernel points over the (1/|det|) grid box.
long long cofactor_det(const RatMat& b) {
  const int n = b.rows();
  if (n == 1) return b(0, 0).numerator();
  if (n == 2) return (b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0)).numerator();
  long long det = 0;
  for (int j = 0; j < 3; ++j) {
    const long long minor = (b(1, (j + 1) % 3) * b(2, (j + 2) % 3) -
                             b(1, (j + 2) % 3) * b(2, (j + 1) % 3)).numerator();
    det += b(0, j).numerator() * minor;
  }
  return det;
}

long long brute_force_kernel_count(const RatMat& b) {
  const int n = b.rows();
  const long long L = std::abs(cofactor_det(b));
  long long count = 0;
  std::vector<long long> idx(n, 0);
  for (;;) {
    bool in_kernel = true;
    for (int row = 0; row < n && in_kernel; ++row) {
      Rat pairing(0);
      for (int j = 0; j < n; ++j) pairing += b(row, j) * Rat(idx[j], L);
      in_kernel = pairing.denominator() == 1;
    }
    if (in_kernel) ++count;
    int c = 0;
    while (c < n && ++idx[c] == L) idx[c++] = 0;
    if (c == n) break;
  }
  return count;
}

}  // namespace

TEST_CASE("sheet potential values and exactness") {
  const PotentialSheet vac = make_sheet({0}, int_form({{2}}));
  CHECK(torus_sheet_potential(vac, RatVec{Rat(0)}) == Rat(0));
  CHECK(torus_sheet_potential(vac, RatVec{Rat(1, 2)}) == Rat(1, 4));

  const PotentialSheet s = make_sheet({3, -1}, int_form({{2, 1}, {1, 4}}));
  const RatVec mu{Rat(1, 3), Rat(-1, 2)};
  // -<l|mu> + B(mu,mu)/2 expanded by hand
  const Rat expected = -(Rat(3) * Rat(1, 3) + Rat(-1) * Rat(-1, 2)) +
                       (Rat(2) * Rat(1, 9) + Rat(2) * Rat(1, 3) * Rat(-1, 2) + Rat(4) * Rat(1, 4)) / 2;
  CHECK(torus_sheet_potential(s, mu) == expected);
}

TEST_CASE("critical point: exact solve, gradient, Hessian, finite differences") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 3);
    const RatMat b = random_even_form(rank, rng);
    std::uniform_int_distribution<int> lam(-4, 4);
    for (int sheet_no = 0; sheet_no < 3; ++sheet_no) {
      std::vector<long long> lambda(rank);
      for (auto& l : lambda) l = lam(rng);
      const PotentialSheet sheet = make_sheet(lambda, b);
      const RatVec crit = sheet_critical_point(sheet);

      // gradient vanishes exactly at the critical point and nowhere else
      for (const Rat& g : sheet_gradient(sheet, crit)) CHECK(g == Rat(0));
      RatVec off = crit;
      off[0] += Rat(1, 7);
      bool nonzero = false;
      for (const Rat& g : sheet_gradient(sheet, off)) nonzero = nonzero || g != Rat(0);
      CHECK(nonzero);

      // critical value equals -B(l#, l#)/2
      CHECK(torus_sheet_potential(sheet, crit) == sheet_critical_value(sheet));

      // finite-difference gradient at a nearby double point (Hessian is B)
      Eigen::VectorXd x(rank);
      for (int i = 0; i < rank; ++i) x[i] = to_double(crit[i]) + 0.25 * (i + 1);
      for (int i = 0; i < rank; ++i) {
        Eigen::VectorXd hi = x, lo = x;
        hi[i] += 1e-5;
        lo[i] -= 1e-5;
        const double fd = (torus_sheet_potential(sheet, hi) - torus_sheet_potential(sheet, lo)) / 2e-5;
        double exact = -static_cast<double>(lambda[i]);
        for (int j = 0; j < rank; ++j) exact += to_double(b(i, j)) * x[j];
        CHECK(fd == doctest::Approx(exact).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("translation descent: exact integers, independent of mu") {
  const PotentialSheet vac = make_sheet({0}, int_form({{2}}));
  CHECK(translation_descent_check(vac, {0}, RatVec{Rat(1, 3)}) == 0);
  // rank 1, B=(2), lambda=0, p=1, mu=1/2
  const long long shift = translation_descent_check(vac, {1}, RatVec{Rat(1, 2)});
  CHECK(shift == -1);   // -B(p,p)/2 - <lambda|p> = -1

  std::mt19937_64 rng(202);
  std::uniform_int_distribution<int> lam(-5, 5), pval(-3, 3), num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 3);
    const RatMat b = random_even_form(rank, rng, 200);
    std::vector<long long> lambda(rank);
    for (auto& l : lambda) l = lam(rng);
    const PotentialSheet sheet = make_sheet(lambda, b);
    std::vector<long long> p(rank);
    for (auto& v : p) v = pval(rng);

    RatVec mu(rank);
    for (auto& m : mu) m = Rat(num(rng), den(rng));
    const long long got = translation_descent_check(sheet, p, mu);

    // closed form: -B(p,p)/2 - <lambda|p>, and mu-independence
    RatVec pr(rank);
    for (int i = 0; i < rank; ++i) pr[i] = Rat(p[i]);
    Rat expected = -form_value(b, pr, pr) / 2;
    for (int i = 0; i < rank; ++i) expected -= Rat(lambda[i]) * Rat(p[i]);
    CHECK(Rat(got) == expected);

    RatVec mu2(rank);
    for (auto& m : mu2) m = Rat(num(rng), den(rng));
    CHECK(translation_descent_check(sheet, p, mu2) == got);
  }
}

TEST_CASE("sheet validation errors") {
  CHECK_THROWS_WITH_AS(make_sheet({0}, int_form({{3}})), doctest::Contains("even"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_sheet({0}, int_form({{-2}})), doctest::Contains("positive definite"),
                       std::invalid_argument);
  RatMat frac(1, 1);
  frac(0, 0) = Rat(1, 2);
  CHECK_THROWS_WITH_AS(make_sheet({0}, frac), doctest::Contains("integral"), std::invalid_argument);
  RatMat asym = int_form({{2, 1}, {0, 2}});
  CHECK_THROWS_WITH_AS(make_sheet({0, 0}, asym), doctest::Contains("symmetric"),
                       std::invalid_argument);
  const PotentialSheet vac = make_sheet({0, 0}, int_form({{2, 0}, {0, 2}}));
  CHECK_THROWS_AS(translation_descent_check(vac, {1}, RatVec{Rat(0), Rat(0)}),
                  std::invalid_argument);
}

TEST_CASE("smith normal form invariants") {
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    LatticeMat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = entry(rng);
    const SmithNormalForm s = smith_normal_form(g);
    CHECK(s.u * g * s.v == s.d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    for (int i = 0; i + 1 < n; ++i)
      if (s.d(i, i) != 0 && s.d(i + 1, i + 1) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
  }
}

TEST_CASE("kernel point examples") {
  const VerlindeData r2 = verlinde_kernel_points(1, int_form({{2}}));
  CHECK(r2.det == 2);
  REQUIRE(r2.points.size() == 2);
  CHECK(r2.points[0].coords[0] == Rat(0));
  CHECK(r2.points[1].coords[0] == Rat(1, 2));

  const VerlindeData r6 = verlinde_kernel_points(1, int_form({{6}}));
  CHECK(r6.det == 6);
  REQUIRE(r6.points.size() == 6);
  for (int k = 0; k < 6; ++k) CHECK(r6.points[k].coords[0] == Rat(k, 6));

  CHECK(verlinde_kernel_points(2, int_form({{2, 0}, {0, 4}})).points.size() == 8);
}

TEST_CASE("kernel count equals det(B): brute-force oracle on random forms") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 3);
    const RatMat b = random_even_form(rank, rng);
    CAPTURE(rank);
    const VerlindeData vd = verlinde_kernel_points(rank, b);
    CHECK(vd.det == cofactor_det(b));
    CHECK(static_cast<long long>(vd.points.size()) == vd.det);
    CHECK(brute_force_kernel_count(b) == vd.det);
  }
}

TEST_CASE("A1 Verlinde classes at level 1") {
  const RootSystem a1 = build_root_system("A1");
  const VerlindeData vd = verlinde_classes_simple(a1, 1);
  CHECK(vd.det == 6);                      // Gram = 2(k+2) = 6
  CHECK(vd.points.size() == 6);
  int regular = 0;
  for (const auto& p : vd.points) regular += p.regular ? 1 : 0;
  CHECK(regular == 4);
  REQUIRE(vd.representatives.size() == 2);
  CHECK(vd.points[vd.representatives[0]].coords[0] == Rat(1, 6));
  CHECK(vd.points[vd.representatives[1]].coords[0] == Rat(1, 3));

  // ribbon data: W = -1/12 and -1/3; ratio = exp(-2 pi i / 4), the
  // conformal-weight oracle h = j(j+1)/(k+2) at j = 1/2
  CHECK(vd.critical_values[0] == Rat(-1, 12));
  CHECK(vd.critical_values[1] == Rat(-1, 3));
  const std::complex<double> ratio = vd.phases[1] / vd.phases[0];
  const double h = 0.5 * 1.5 / 3.0;
  const std::complex<double> oracle =
      std::exp(std::complex<double>(0, -2.0 * std::numbers::pi * h));
  CHECK(std::abs(ratio - oracle) <= 1e-12);
  CHECK(std::abs(ratio - vd.phases_vacuum[1]) <= 1e-12);
  CHECK(std::abs(vd.phases_vacuum[0] - 1.0) <= 1e-15);
  CHECK(vd.vacuum == 0);
}

TEST_CASE("A1 representative count matches the alcove oracle for levels 1..10") {
  const RootSystem a1 = build_root_system("A1");
  CHECK(verlinde_classes_simple(a1, 3).representatives.size() == 4);
  for (int k = 1; k <= 10; ++k) {
    // independent oracle: dominant weights n with <lambda, theta_vee> = n <= k
    long long alcove = 0;
    for (int n = 0; n <= k; ++n) ++alcove;
    CHECK(static_cast<long long>(verlinde_classes_simple(a1, k).representatives.size()) == alcove);
  }
  CHECK_THROWS_AS(verlinde_classes_simple(a1, 0), std::invalid_argument);
  CHECK_THROWS_AS(verlinde_classes_simple(build_root_system("T1"), 1), std::invalid_argument);
}

TEST_CASE("higher-rank Verlinde counts match the alcove enumeration") {
  struct Case {
    const char* tag;
    int level;
  };
  for (const Case c : {Case{"A2", 1}, Case{"A2", 2}, Case{"A2", 3}, Case{"B2", 1}, Case{"B2", 2},
                       Case{"G2", 1}, Case{"G2", 2}}) {
    CAPTURE(c.tag);
    CAPTURE(c.level);
    const RootSystem rs = build_root_system(c.tag);
    // alcove oracle: dominant lambda with <lambda, theta_vee> <= k, theta_vee
    // expanded in coroots via the weight-lattice Gram
    const Eigen::VectorXi theta = rs.positive_roots[rs.highest_root_index()];
    RatVec marks(rs.rank, Rat(0));
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) marks[i] += rs.gram_weights(i, j) * Rat(theta[j]);
    long long alcove = 0;
    std::vector<int> lam(rs.rank, 0);
    for (;;) {
      Rat pairing(0);
      for (int i = 0; i < rs.rank; ++i) pairing += marks[i] * Rat(lam[i]);
      if (pairing <= Rat(c.level)) ++alcove;
      int i = 0;
      while (i < rs.rank && ++lam[i] > c.level) lam[i++] = 0;
      if (i == rs.rank) break;
    }
    CHECK(static_cast<long long>(verlinde_classes_simple(rs, c.level).representatives.size()) ==
          alcove);
  }
}

TEST_CASE("verlinde JSON shape") {
  const auto j = verlinde_json(verlinde_classes_simple(build_root_system("A1"), 1));
  CHECK(j["tag"] == "A1");
  CHECK(j["level"] == 1);
  CHECK(j["kernel_count"] == 6);
  CHECK(j["representative_count"] == 2);
  CHECK(j["points"].size() == 6);
  CHECK(j["representatives"][0]["coords"][0] == "1/6");
  CHECK(j["representatives"][0]["critical_value"] == "-1/12");
  CHECK(j["representatives"][0]["phase"].contains("re"));
  // rescaled column: lcm(12, 3) = 12 clears both -1/12 and -1/3
  CHECK(j["rescale_factor"] == 12);
  CHECK(j["representatives"][0]["critical_value_rescaled"] == -1);
  CHECK(j["representatives"][1]["critical_value_rescaled"] == -4);
}
