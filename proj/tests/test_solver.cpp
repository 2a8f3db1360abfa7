#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gljunction/solver.hpp"
#include "gljunction/spectrum.hpp"

using namespace gljunction;
using std::numbers::pi;

namespace {

RadialProblem radial(double eps, int n = 400) {
  return RadialProblem(DiskInDisk(1.0, 2.0), Params(1.0, 1.0, eps), n);
}

}  // namespace

TEST_CASE("radial solve in the nontrivial regime") {
  const RadialProblem p = radial(0.2);
  SolveOptions opts;
  opts.k0 = 2.0;
  const SolveResult r = solve(p, RampInit{}, opts);
  CHECK(r.report.converged);
  CHECK(r.report.status == "converged");
  CHECK(r.report.mode == "radial");
  CHECK(r.report.grad_norm < 1e-9);
  CHECK(r.report.min_u > 0.0);
  CHECK(r.report.max_u < 1.0);
  CHECK(r.report.strictly_between);
  CHECK(r.report.energy < r.report.normal_state_energy);
  CHECK(r.report.normal_state_energy == doctest::Approx(pi / (2 * 0.04)));
  CHECK(r.report.energy == doctest::Approx(energy_of_solution(p, r.u)));
  CHECK(r.report.resolution_ok);
  REQUIRE(r.report.interior_inf.has_value());
  CHECK(*r.report.interior_inf == doctest::Approx(verify_interior_bound(p, r.u, 2.0)));
  CHECK_FALSE(solve(p, RampInit{}).report.interior_inf.has_value());
  CHECK(r.report.init_kind == "ramp");
  CHECK_FALSE(r.report.seed.has_value());
  CHECK(r.trace.size() == static_cast<std::size_t>(r.report.iterations));
}

TEST_CASE("energy never increases along the trace") {
  const RadialProblem p = radial(0.2);
  const SolveResult r = solve(p, RandomInit{5});
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    CHECK(r.trace[i].energy <= r.trace[i - 1].energy * (1 + 1e-14));
  }
  CHECK(r.report.energy <= r.trace.back().energy * (1 + 1e-14));
}

TEST_CASE("initial guesses lead to the same minimizer") {
  const RadialProblem p = radial(0.25);
  const Field a = solve(p, RampInit{}).u;
  const Field b = solve(p, ConstantInit{0.5}).u;
  const SolveResult c = solve(p, RandomInit{11});
  CHECK((a - b).lpNorm<Eigen::Infinity>() < 1e-7);
  CHECK((a - c.u).lpNorm<Eigen::Infinity>() < 1e-7);
  CHECK(c.report.seed == 11u);
  CHECK((solve(p, FieldInit{a}).u - a).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("random solves are reproducible") {
  const RadialProblem p = radial(0.3);
  const SolveResult a = solve(p, RandomInit{7});
  const SolveResult b = solve(p, RandomInit{7});
  CHECK(a.u == b.u);
  CHECK(a.report.energy == b.report.energy);
}

TEST_CASE("trivial regime gives the zero state") {
  const RadialProblem p = radial(1.0);
  REQUIRE(lambda1(p).lambda1 > 0.0);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const SolveResult r = solve(p, RandomInit{seed});
    CHECK(r.report.sup_norm < 1e-8);
  }
}

TEST_CASE("invalid initial guesses") {
  const RadialProblem p = radial(0.3);
  CHECK_THROWS_AS(solve(p, ConstantInit{1.5}), InvalidArgument);
  CHECK_THROWS_AS(solve(p, FieldInit{Field::Zero(4)}), GridMismatch);
  CHECK_THROWS_AS(solve(p, FieldInit{Field::Constant(p.size(), -0.1)}), InvalidArgument);
}

TEST_CASE("exhausted budget still returns the iterate") {
  const RadialProblem p = radial(0.1);
  SolveOptions opts;
  opts.max_iterations = 1;
  try {
    solve(p, RandomInit{0}, opts);
    FAIL("expected SolveNonConvergence");
  } catch (const SolveNonConvergence& e) {
    CHECK_FALSE(e.result().report.converged);
    CHECK(e.result().report.status == "non_convergence");
    CHECK(e.result().u.size() == p.size());
  }
}

TEST_CASE("interior bound needs a non-empty region") {
  const RadialProblem p = radial(0.3);
  const Field u = Field::Constant(p.size(), 0.9);
  CHECK(verify_interior_bound(p, u, 1.0) == doctest::Approx(0.9));
  CHECK_THROWS_AS(verify_interior_bound(p, u, 5.0), EmptyRegion);
  CHECK_THROWS_AS(verify_interior_bound(p, Field::Zero(3), 1.0), GridMismatch);
}

TEST_CASE("Cartesian solve") {
  const CartesianProblem p(DiskInDisk(1.0, 1.8), Params(1.0, 1.0, 0.3), 1.0 / 16);
  const SolveResult r = solve(p, RampInit{});
  CHECK(r.report.converged);
  CHECK(r.report.mode == "cart");
  CHECK(r.report.grad_norm < 1e-7);
  CHECK(r.report.strictly_between);
  CHECK(r.report.energy < r.report.normal_state_energy);
}

TEST_CASE("interior lower bound at eps = 0.02") {
  const RadialProblem p = radial(0.02, 4000);
  const SolveResult r = solve(p, RampInit{});
  REQUIRE(r.report.interior_inf.has_value());
  CHECK(*r.report.interior_inf >= 0.5);
  CHECK(r.report.min_u > 0.0);
}
