#include <cmath>

#include "doctest.h"
#include "gljunction/error.hpp"
#include "gljunction/spectrum.hpp"
#include "oracles.hpp"

using namespace gljunction;

TEST_CASE("Bessel oracles") {
  CHECK(oracle::j0_first_zero() == doctest::Approx(2.404825557695773).epsilon(1e-14));
  CHECK(std::abs(oracle::bessel_y0(1.0) - 0.08825696421567696) < 1e-14);
}

TEST_CASE("Dirichlet eigenvalues against Bessel zeros") {
  const double disk = dirichlet_lambda1(Disk{1.0}, 2000);
  CHECK(std::abs(disk - oracle::disk_dirichlet(1.0)) < 1e-5 * disk);
  CHECK(dirichlet_lambda1(Disk{2.0}, 2000) == doctest::Approx(disk / 4).epsilon(1e-10));
  const double ring = dirichlet_lambda1(Annulus{1.0, 2.0}, 2000);
  CHECK(std::abs(ring - oracle::annulus_dirichlet(1.0, 2.0)) < 1e-5 * ring);
  CHECK_THROWS_AS(dirichlet_lambda1(Disk{1.0}, 1), InvalidArgument);
  CHECK_THROWS_AS(dirichlet_lambda1(Annulus{2.0, 1.0}, 10), InvalidArgument);
}

TEST_CASE("radial lambda1 properties") {
  const DiskInDisk g(1.0, 2.0);
  for (double eps : {0.2, 0.5, 1.0}) {
    const RadialProblem p(g, Params(1.0, 1.0, eps), 400);
    const EigenReport e = lambda1(p);
    CHECK(e.residual < 1e-8 * std::max(1.0, std::abs(e.lambda1)));
    CHECK(e.bound_satisfied);
    CHECK(std::abs(rayleigh_quotient(p, e.eigenfunction) - e.lambda1) <=
          1e-8 * std::max(1.0, std::abs(e.lambda1)));
    CHECK(p.model().mass().dot(e.eigenfunction) > 0.0);
    CHECK(e.eigenfunction.dot(p.model().mass().cwiseProduct(e.eigenfunction)) ==
          doctest::Approx(1.0));
    CHECK(e.lambda1 > e.shift);
  }
}

TEST_CASE("lambda1 decreases as eps shrinks through the sign change") {
  const DiskInDisk g(1.0, 2.0);
  double prev = 1e300;
  for (double eps : {0.8, 0.7, 0.6, 0.5, 0.4, 0.3}) {
    const double l = lambda1(RadialProblem(g, Params(1.0, 1.0, eps), 400)).lambda1;
    CHECK(l < prev);
    prev = l;
  }
  CHECK(classify(lambda1(RadialProblem(g, Params(1, 1, 0.3), 400))) == Regime::nontrivial);
  CHECK(classify(lambda1(RadialProblem(g, Params(1, 1, 0.8), 400))) == Regime::trivial);
}

TEST_CASE("Cartesian lambda1 is close to the radial value") {
  const DiskInDisk g(1.0, 2.0);
  const Params p(1.0, 1.0, 0.4);
  const double rad = lambda1(RadialProblem(g, p, 400)).lambda1;
  const CartesianProblem cart(g, p, 1.0 / 32);
  const EigenReport e = lambda1(cart);
  CHECK(std::abs(e.lambda1 - rad) < 0.1 * std::abs(rad));
  CHECK(std::abs(rayleigh_quotient(cart, e.eigenfunction) - e.lambda1) <=
        1e-8 * std::max(1.0, std::abs(e.lambda1)));
}

TEST_CASE("classification dead band") {
  CHECK(classify(-1e-3) == Regime::nontrivial);
  CHECK(classify(1e-3) == Regime::trivial);
  CHECK(classify(5e-11) == Regime::indeterminate);
  CHECK(classify(-5e-11) == Regime::indeterminate);
  CHECK(std::string(to_string(Regime::indeterminate)) == "indeterminate");
}
