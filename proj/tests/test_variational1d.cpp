#include <cmath>

#include "doctest.h"
#include "gljunction/error.hpp"
#include "gljunction/profile.hpp"
#include "gljunction/variational1d.hpp"
#include "oracles.hpp"

using namespace gljunction;

TEST_CASE("grid layout") {
  const Grid1D grid(2.0, 0.5);
  CHECK(grid.size() == 9);
  CHECK(grid.interface_index() == 4);
  CHECK(grid.node(0) == -2.0);
  CHECK(grid.node(4) == 0.0);
  CHECK(grid.nodes()[8] == 2.0);
  CHECK_THROWS_AS(Grid1D(1.0, 0.3), InvalidArgument);
  CHECK_THROWS_AS(Grid1D(1.0, 0.0), InvalidArgument);
}

TEST_CASE("default truncation covers both tails") {
  CHECK(default_truncation(Params(1, 1)) >= 40.0);
  CHECK(default_truncation(Params(0.01, 0.01)) >= 20.0 / std::sqrt(1e-4));
}

TEST_CASE("discrete functional of the exact profile approximates c1") {
  const Params p(1.0, 1.0);
  const Grid1D grid(40.0, 1e-2);
  const ChainEnergy F = discrete_functional(grid, p);
  const double c1 = quadrature_c1(p).total();
  CHECK(std::abs(F.energy(sample_profile(grid, p)) - c1) < 1e-4);
}

TEST_CASE("gradient of the 1D functional matches finite differences") {
  const Params p(0.25, 4.0);
  const Grid1D grid(5.0, 0.1);
  const ChainEnergy F = discrete_functional(grid, p);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Eigen::VectorXd u = uniform_random_field(grid.size(), seed);
    const Eigen::VectorXd v = uniform_random_field(grid.size(), seed + 100).array() - 0.5;
    const double fd = oracle::directional_fd([&](const Eigen::VectorXd& x) { return F.energy(x); },
                                             u, v, 1e-3);
    CHECK(F.gradient(u).dot(v) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("minimize_F reaches the closed-form profile from different starts") {
  const Params p(1.0, 1.0);
  const Grid1D grid(20.0, 2e-2);
  const Eigen::VectorXd exact = sample_profile(grid, p);
  const auto a = minimize_F(grid, p, Eigen::VectorXd::Constant(grid.size(), 0.5));
  const auto b = minimize_F(grid, p, uniform_random_field(grid.size(), 3));
  CHECK((a.values - b.values).lpNorm<Eigen::Infinity>() < 1e-6);
  CHECK((a.values - exact).lpNorm<Eigen::Infinity>() < 8.0 * 2e-2 * 2e-2);
  CHECK(a.values.minCoeff() >= 0.0);
  CHECK(a.values.maxCoeff() <= 1.0);
  CHECK(a.energy == doctest::Approx(b.energy).epsilon(1e-12));
  CHECK_THROWS_AS(minimize_F(grid, p, Eigen::VectorXd::Zero(3)), GridMismatch);
}

TEST_CASE("minimize_F reports an exhausted budget") {
  const Params p(1.0, 1.0);
  const Grid1D grid(20.0, 2e-2);
  CHECK_THROWS_AS(minimize_F(grid, p, uniform_random_field(grid.size(), 1), 1e-10, 1),
                  NonConvergence);
}

TEST_CASE("random fields are reproducible and in (0, 1)") {
  const Eigen::VectorXd a = uniform_random_field(1000, 42);
  const Eigen::VectorXd b = uniform_random_field(1000, 42);
  CHECK(a == b);
  CHECK(a != uniform_random_field(1000, 43));
  CHECK(a.minCoeff() > 0.0);
  CHECK(a.maxCoeff() < 1.0);
  CHECK(std::abs(a.mean() - 0.5) < 0.05);
}
