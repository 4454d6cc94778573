#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "diracmf/rep.hpp"

using namespace diracmf;

namespace {

Eigen::VectorXi coords(std::initializer_list<int> v) {
  Eigen::VectorXi c(static_cast<int>(v.size()));
  int i = 0;
  for (int x : v) c[i++] = x;
  return c;
}

CartanVector random_cartan(const RootSystem& rs, std::mt19937_64& rng, double box = 3.0) {
  std::uniform_real_distribution<double> dist(-box, box);
  Eigen::VectorXd c(rs.rank);
  for (int i = 0; i < rs.rank; ++i) c[i] = dist(rng);
  return {rs.tag, c};
}

}  // namespace

TEST_CASE("A1 fundamental representation") {
  const RootSystem rs = build_root_system("A1");
  const auto rep = irrep_matrices(rs, {rs.tag, coords({1})});
  REQUIRE(rep.dim == 2);
  REQUIRE(rep.weight_of_basis.size() == 2);
  CHECK(rep.weight_of_basis[0] == coords({1}));
  CHECK(rep.weight_of_basis[1] == coords({-1}));

  // Cartan direction acts with eigenvalues +-i c; weights +-1 pair with the
  // unit coroot direction as 1/sqrt(2).
  CartanVector mu{rs.tag, Eigen::VectorXd::Constant(1, 1.0 / std::sqrt(2.0))};
  CHECK(norm_sq(rs, mu) == doctest::Approx(1.0));
  const Eigen::MatrixXcd t = cartan_action(rep, mu);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(t);
  std::vector<double> imag{es.eigenvalues()(0).imag(), es.eigenvalues()(1).imag()};
  std::sort(imag.begin(), imag.end());
  CHECK(imag[0] == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(imag[1] == doctest::Approx(1.0 / std::sqrt(2.0)));
  for (auto ev : {es.eigenvalues()(0), es.eigenvalues()(1)}) CHECK(std::abs(ev.real()) < 1e-12);
}

TEST_CASE("defining dimensions") {
  const RootSystem a2 = build_root_system("A2");
  CHECK(irrep_matrices(a2, {a2.tag, coords({1, 0})}).dim == 3);
  const auto adj = irrep_matrices(a2, {a2.tag, coords({1, 1})});
  CHECK(adj.dim == 8);
  int zero_weight = 0;
  for (const auto& w : adj.weight_of_basis)
    if (w == coords({0, 0})) ++zero_weight;
  CHECK(zero_weight == 2);
}

TEST_CASE("weight multiplicity examples") {
  const RootSystem a1 = build_root_system("A1");
  const auto m = weight_multiplicities(a1, {a1.tag, coords({2})});
  REQUIRE(m.size() == 3);
  CHECK(m.at(coords({2})) == 1);
  CHECK(m.at(coords({0})) == 1);
  CHECK(m.at(coords({-2})) == 1);

  const RootSystem a2 = build_root_system("A2");
  CHECK(weight_multiplicities(a2, {a2.tag, coords({1, 1})}).at(coords({0, 0})) == 2);

  const auto trivial = weight_multiplicities(a2, {a2.tag, coords({0, 0})});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.at(coords({0, 0})) == 1);
}

TEST_CASE("multiplicities sum to the Weyl dimension") {
  for (const char* tag : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(tag);
    const RootSystem rs = build_root_system(tag);
    for (const auto& lam : dominant_weights_up_to_dim(rs, 60)) {
      long long total = 0;
      for (const auto& [w, c] : weight_multiplicities(rs, lam)) total += c;
      CHECK(total == weyl_dimension(rs, lam));
    }
  }
}

TEST_CASE("irrep invariants: anti-hermitian, bracket, Casimir") {
  std::initializer_list<const char*> tags = {"A1", "A2", "B2", "G2"};
  for (const char* tag : tags) {
    CAPTURE(tag);
    const RootSystem rs = build_root_system(tag);
    const auto weights = dominant_weights_up_to_dim(rs, tag == std::string("G2") ? 14 : 30);
    for (const auto& lam : weights) {
      CAPTURE(lam.coords.transpose());
      const auto rep = irrep_matrices(rs, lam);
      const auto res = irrep_residuals(rep);
      CHECK(res.anti_hermitian <= 1e-10);
      CHECK(res.bracket <= 1e-9);
      CHECK(res.casimir <= 1e-9);
    }
  }
}

TEST_CASE("cartan_action: zero, linearity, eigenvalue labels") {
  const RootSystem rs = build_root_system("A2");
  const auto rep = irrep_matrices(rs, {rs.tag, coords({1, 1})});
  std::mt19937_64 rng(42);

  CartanVector zero{rs.tag, Eigen::VectorXd::Zero(2)};
  CHECK(cartan_action(rep, zero).cwiseAbs().maxCoeff() == 0.0);

  const CartanVector mu = random_cartan(rs, rng);
  CartanVector mu2{rs.tag, 2.0 * mu.coords};
  CHECK((cartan_action(rep, mu2) - 2.0 * cartan_action(rep, mu)).cwiseAbs().maxCoeff() < 1e-12);

  // eigenvalues of -i T(mu) must be the weight pairings <nu, mu>, with multiplicity
  for (int trial = 0; trial < 5; ++trial) {
    const CartanVector probe = random_cartan(rs, rng);
    const Eigen::MatrixXcd t = std::complex<double>(0, -1) * cartan_action(rep, probe);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t);
    std::vector<double> expected;
    for (const auto& w : rep.weight_of_basis)
      expected.push_back(weight_pairing(WeightVector{rs.tag, w}, probe));
    std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + rep.dim);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    for (int i = 0; i < rep.dim; ++i) CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-8));
  }
}

TEST_CASE("eigenvalue multiset of the Cartan action matches the Freudenthal multiplicities") {
  std::mt19937_64 rng(77);
  for (const char* tag : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(tag);
    const RootSystem rs = build_root_system(tag);
    const WeightVector lam{rs.tag, Eigen::VectorXi::Ones(rs.rank)};
    const auto rep = irrep_matrices(rs, lam);
    const auto mults = weight_multiplicities(rs, lam);
    for (int trial = 0; trial < 5; ++trial) {
      const CartanVector probe = random_cartan(rs, rng);
      std::vector<double> expected;
      for (const auto& [w, count] : mults)
        for (long long c = 0; c < count; ++c)
          expected.push_back(weight_pairing(WeightVector{rs.tag, w}, probe));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
          std::complex<double>(0, -1) * cartan_action(rep, probe));
      std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + rep.dim);
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      REQUIRE(got.size() == expected.size());
      for (size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-8));
    }
  }
}

TEST_CASE("error paths: non-dominant weight, dimension cap, mismatched systems") {
  const RootSystem rs = build_root_system("A2");
  CHECK_THROWS_WITH_AS(irrep_matrices(rs, {rs.tag, coords({-1, 0})}),
                       doctest::Contains("dominant"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(irrep_matrices(rs, {rs.tag, coords({20, 20})}),
                       doctest::Contains("exceeds cap"), std::invalid_argument);
  CHECK_THROWS_AS(weight_multiplicities(rs, {rs.tag, coords({0, -2})}), std::invalid_argument);

  const RootSystem a1 = build_root_system("A1");
  const auto rep = irrep_matrices(a1, {a1.tag, coords({1})});
  CartanVector wrong{rs.tag, Eigen::VectorXd::Zero(2)};
  CHECK_THROWS_WITH_AS(cartan_action(rep, wrong), doctest::Contains("mismatched"),
                       std::invalid_argument);
}

TEST_CASE("disk cache reproduces construction bit for bit") {
  const RootSystem rs = build_root_system("A2");
  const WeightVector lam{rs.tag, coords({2, 1})};

  set_irrep_cache_dir(std::nullopt);
  const auto fresh = irrep_matrices(rs, lam);

  const auto dir = std::filesystem::temp_directory_path() / "diracmf-cache-test";
  std::filesystem::remove_all(dir);
  set_irrep_cache_dir(dir.string());
  const auto first = irrep_matrices(rs, lam);    // populates the cache
  const auto second = irrep_matrices(rs, lam);   // reads it back
  set_irrep_cache_dir(std::nullopt);

  REQUIRE(std::filesystem::exists(dir));
  for (int a = 0; a < rs.dim_g; ++a) {
    CHECK(first.action[a] == fresh.action[a]);
    CHECK(second.action[a] == fresh.action[a]);
  }
  CHECK(second.weight_of_basis == fresh.weight_of_basis);
  std::filesystem::remove_all(dir);
}
