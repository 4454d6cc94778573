#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "diracmf/clifford.hpp"

using namespace diracmf;

namespace {

double anticommutator_residual(const SpinorModule& sm) {
  double worst = 0;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(sm.dim, sm.dim);
  for (int a = 0; a < sm.n; ++a)
    for (int b = a; b < sm.n; ++b) {
      Eigen::MatrixXcd anti = sm.psi[a] * sm.psi[b] + sm.psi[b] * sm.psi[a];
      if (a == b) anti -= 2.0 * static_cast<double>(sm.kappa) * id;
      worst = std::max(worst, anti.cwiseAbs().maxCoeff());
    }
  return worst;
}

}  // namespace

TEST_CASE("anticommutation table exact for all supported algebras") {
  for (const char* tag : {"T1", "T2", "T3", "T4", "A1", "A2", "B2", "G2"}) {
    CAPTURE(tag);
    const RootSystem rs = build_root_system(tag);
    for (int kappa : {1, -1}) {
      const SpinorModule sm = spinor_module(rs, kappa);
      CHECK(sm.dim == (1 << (sm.n / 2)));
      CHECK(anticommutator_residual(sm) <= 1e-12);
    }
  }
}

TEST_CASE("rank-one Clifford algebra (torus T1)") {
  const RootSystem rs = build_root_system("T1");
  const SpinorModule plus = spinor_module(rs, 1);
  REQUIRE(plus.dim == 1);
  CHECK(plus.psi[0](0, 0) == std::complex<double>(1, 0));
  const SpinorModule minus = spinor_module(rs, -1);
  CHECK(minus.psi[0](0, 0) == std::complex<double>(0, 1));
  CHECK((minus.psi[0] * minus.psi[0])(0, 0).real() == doctest::Approx(-1.0));
}

TEST_CASE("su(2) spinors: 2-dimensional, volume element squares to -kappa^3") {
  const RootSystem rs = build_root_system("A1");
  for (int kappa : {1, -1}) {
    const SpinorModule sm = spinor_module(rs, kappa);
    REQUIRE(sm.dim == 2);
    const Eigen::MatrixXcd vol = sm.psi[0] * sm.psi[1] * sm.psi[2];
    // vol = c Id with c^2 = -kappa^3
    CHECK((vol - vol(0, 0) * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    const std::complex<double> c2 = vol(0, 0) * vol(0, 0);
    CHECK(c2.real() == doctest::Approx(-std::pow(kappa, 3)));
    CHECK(std::abs(c2.imag()) < 1e-15);
    // a != b anticommutator vanishes identically
    CHECK((sm.psi[0] * sm.psi[1] + sm.psi[1] * sm.psi[0]).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("chirality grading for even-dimensional algebras") {
  for (const char* tag : {"A2", "B2", "T2", "T4"}) {
    CAPTURE(tag);
    const RootSystem rs = build_root_system(tag);
    const SpinorModule sm = spinor_module(rs, 1);
    REQUIRE(sm.graded());
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(sm.dim, sm.dim);
    CHECK((sm.chirality * sm.chirality - id).cwiseAbs().maxCoeff() <= 1e-12);
    for (const auto& p : sm.psi)
      CHECK((sm.chirality * p + p * sm.chirality).cwiseAbs().maxCoeff() <= 1e-12);
  }
  // odd case carries no grading matrix
  CHECK_FALSE(spinor_module(build_root_system("A1"), 1).graded());
}

TEST_CASE("clifford_vector squares to kappa |mu|^2") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-2, 2);
  for (const char* tag : {"A1", "A2", "B2"}) {
    const RootSystem rs = build_root_system(tag);
    for (int kappa : {1, -1}) {
      const SpinorModule sm = spinor_module(rs, kappa);
      const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(sm.dim, sm.dim);

      CartanVector zero{rs.tag, Eigen::VectorXd::Zero(rs.rank)};
      CHECK(clifford_vector(sm, zero).cwiseAbs().maxCoeff() == 0.0);

      for (int trial = 0; trial < 5; ++trial) {
        Eigen::VectorXd c(rs.rank);
        for (int i = 0; i < rs.rank; ++i) c[i] = dist(rng);
        CartanVector mu{rs.tag, c};
        const Eigen::MatrixXcd p = clifford_vector(sm, mu);
        CHECK((p * p - kappa * norm_sq(rs, mu) * id).cwiseAbs().maxCoeff() <= 1e-12);
        // linearity
        CartanVector nu{rs.tag, Eigen::VectorXd::Constant(rs.rank, 0.25)};
        CartanVector sum{rs.tag, mu.coords + nu.coords};
        CHECK((clifford_vector(sm, sum) - clifford_vector(sm, mu) - clifford_vector(sm, nu))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
      }
    }
  }
}

TEST_CASE("normalised mu gives psi(mu)^2 = kappa") {
  const RootSystem rs = build_root_system("A1");
  const SpinorModule sm = spinor_module(rs, 1);
  CartanVector unit{rs.tag, Eigen::VectorXd::Constant(1, 1.0 / std::sqrt(2.0))};
  const Eigen::MatrixXcd p = clifford_vector(sm, unit);
  CHECK((p * p - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("errors: dimension too large, mismatched systems, bad kappa") {
  const RootSystem a3 = build_root_system("A3");   // dim g = 15
  CHECK_THROWS_WITH_AS(spinor_module(a3, 1), doctest::Contains("dimension too large"),
                       std::invalid_argument);
  const RootSystem a1 = build_root_system("A1");
  const SpinorModule sm = spinor_module(a1, 1);
  const RootSystem a2 = build_root_system("A2");
  CartanVector wrong{a2.tag, Eigen::VectorXd::Zero(2)};
  CHECK_THROWS_WITH_AS(clifford_vector(sm, wrong), doctest::Contains("mismatched"),
                       std::invalid_argument);
  CHECK_THROWS_AS(spinor_module(a1, 2), std::invalid_argument);
}

TEST_CASE("generator JSON dump") {
  const RootSystem rs = build_root_system("A1");
  const auto j = spinor_json(spinor_module(rs, 1));
  CHECK(j["n"] == 3);
  CHECK(j["dim"] == 2);
  CHECK(j["kappa"] == 1);
  CHECK(j["generators"].size() == 3);
}
