#include <cmath>

#include "doctest.h"
#include "gljunction/error.hpp"
#include "gljunction/params.hpp"
#include "oracles.hpp"

using namespace gljunction;

TEST_CASE("params reject non-positive values") {
  CHECK_THROWS_WITH_AS(Params(0.0, 1.0), "a must be > 0", InvalidArgument);
  CHECK_THROWS_WITH_AS(Params(1.0, -1.0), "m must be > 0", InvalidArgument);
  CHECK_THROWS_WITH_AS(Params(1.0, 1.0, 0.0), "eps must be > 0", InvalidArgument);
  CHECK_THROWS_AS(Params(std::nan(""), 1.0), InvalidArgument);
  CHECK_THROWS_AS(Params(1.0, INFINITY), InvalidArgument);
  CHECK_THROWS_AS(Params(1.0, 1.0).with_eps(-2.0), InvalidArgument);
}

TEST_CASE("constants at a = m = 1") {
  const ProfileConstants c = derive_constants(Params(1.0, 1.0));
  CHECK(c.beta == doctest::Approx(oracle::kBetaUnit).epsilon(1e-15));
  CHECK(c.A == doctest::Approx(oracle::kAUnit).epsilon(1e-15));
  CHECK(c.gamma == 1.0);
  CHECK(c.b == 1.0);
  CHECK(c.ell == doctest::Approx(std::sqrt(0.5)));
  CHECK_FALSE(c.c1_quad.has_value());
}

TEST_CASE("beta routes agree and A lies in (0, 1)") {
  for (double a : {0.01, 0.25, 1.0, 4.0, 100.0}) {
    for (double m : {0.01, 0.25, 1.0, 4.0, 100.0}) {
      const ProfileConstants c = derive_constants(Params(a, m));
      CHECK(std::abs(beta_from_ell(c.ell) - c.beta) < 1e-12 * c.beta);
      CHECK(c.beta > 1.0);
      CHECK(c.A > 0.0);
      CHECK(c.A < 1.0);
      CHECK(c.gamma == doctest::Approx(std::sqrt(a / m)).epsilon(1e-15));
      CHECK(c.gamma * c.b == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
}

TEST_CASE("closed forms at the tanh limit") {
  CHECK(std::abs(c1_inner_closed(1.0) - 2.0 * std::sqrt(2.0) / 3.0) < 1e-15);
  CHECK(std::abs(c2_inner_closed(1.0) - 4.0 / 3.0 * (std::log(2.0) - 0.25)) < 1e-15);
}

TEST_CASE("fill_quadrature populates both constants") {
  const Params p(1.0, 1.0);
  ProfileConstants c = derive_constants(p);
  fill_quadrature(c, p);
  REQUIRE(c.c1_quad.has_value());
  REQUIRE(c.c2_quad.has_value());
  CHECK(std::abs(c.c1_quad->inner - oracle::kFrozen[0].c1_inner) < 1e-12);
  CHECK(std::abs(c.c2_quad->outer - oracle::kC2OuterUnit) < 1e-12);
}
