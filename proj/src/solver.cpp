#include "gljunction/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gljunction/profile.hpp"
#include "gljunction/variational1d.hpp"

namespace gljunction {

std::string init_kind(const InitialGuess& init) {
  struct Visitor {
    std::string operator()(const RampInit&) const { return "ramp"; }
    std::string operator()(const ConstantInit&) const { return "constant"; }
    std::string operator()(const RandomInit&) const { return "random"; }
    std::string operator()(const FieldInit&) const { return "field"; }
  };
  return std::visit(Visitor{}, init);
}

namespace {

template <typename Problem>
Field initial_field(const Problem& problem, const InitialGuess& init) {
  const Eigen::Index n = problem.size();
  if (const auto* c = std::get_if<ConstantInit>(&init)) {
    if (!(c->value >= 0.0 && c->value <= 1.0)) {
      throw InvalidArgument("constant init must lie in [0, 1]");
    }
    return Field::Constant(n, c->value);
  }
  if (const auto* r = std::get_if<RandomInit>(&init)) return uniform_random_field(n, r->seed);
  if (const auto* f = std::get_if<FieldInit>(&init)) {
    if (f->values.size() != n) throw GridMismatch("init field does not match the problem");
    if (f->values.minCoeff() < 0.0 || f->values.maxCoeff() > 1.0) {
      throw InvalidArgument("init field values must lie in [0, 1]");
    }
    return f->values;
  }
  const Profile1D profile(problem.params());
  const double eps = problem.params().eps();
  return problem.distances().unaryExpr([&](double t) { return profile.value(t / eps); });
}

template <typename Problem>
double interior_inf(const Problem& problem, const Field& u, double k0) {
  if (u.size() != problem.size()) throw GridMismatch("verify_interior_bound: field size");
  const double threshold = k0 * problem.params().eps();
  if (threshold >= problem.geometry().r1()) {
    throw EmptyRegion("k0 eps >= r1: interior region is empty");
  }
  double inf = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (problem.distances()[i] >= threshold) inf = std::min(inf, u[i]);
  }
  if (!std::isfinite(inf)) throw EmptyRegion("no node with t(x) >= k0 eps");
  return inf;
}

template <typename Problem>
bool strictly_between(const Problem& problem, const Field& u) {
  const double rim = problem.geometry().r2() - 1.5 * problem.spacing();
  const double r1 = problem.geometry().r1();
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double r = r1 - problem.distances()[i];
    const double slack = r > rim ? 1e-10 : 0.0;
    if (!(u[i] > -slack && u[i] < 1.0 + slack)) return false;
  }
  return true;
}

template <typename Problem, typename Backend>
SolveResult run(const Problem& problem, const Backend& backend, const InitialGuess& init,
                const SolveOptions& opts, double default_tol, const char* mode) {
  SolveResult result;
  result.u = initial_field(problem, init);

  MinimizerOptions mopts;
  mopts.grad_tol = opts.grad_tol.value_or(default_tol);
  mopts.step_tol = opts.step_tol;
  mopts.max_iterations = opts.max_iterations;
  mopts.abs_restart = true;
  const MinimizerOutcome outcome = minimize_energy(backend, result.u, mopts);
  result.trace = outcome.trace;

  SolveReport& rep = result.report;
  rep.mode = mode;
  rep.converged = outcome.status == MinimizerStatus::converged;
  rep.status = rep.converged ? "converged"
               : outcome.status == MinimizerStatus::diverged_energy ? "diverged_energy"
                                                                     : "non_convergence";
  rep.iterations = outcome.iterations;
  rep.tolerance = mopts.grad_tol;
  rep.grad_norm = outcome.grad_norm;
  rep.energy = outcome.energy;
  const double eps = problem.params().eps();
  rep.normal_state_energy = problem.geometry().inner_area() / (2.0 * eps * eps);
  rep.min_u = result.u.minCoeff();
  rep.max_u = result.u.maxCoeff();
  rep.sup_norm = result.u.template lpNorm<Eigen::Infinity>();
  rep.strictly_between = strictly_between(problem, result.u);
  rep.k0 = opts.k0;
  try {
    rep.interior_inf = interior_inf(problem, result.u, opts.k0);
  } catch (const EmptyRegion&) {
    rep.interior_inf.reset();
  }
  rep.init_kind = init_kind(init);
  if (const auto* r = std::get_if<RandomInit>(&init)) rep.seed = r->seed;
  rep.abs_restarts = outcome.abs_restarts;
  rep.resolution_ok = resolution_ok(problem.spacing(), eps);

  if (outcome.status == MinimizerStatus::non_convergence) {
    throw SolveNonConvergence("solver did not converge in " + std::to_string(opts.max_iterations) +
                                  " iterations",
                              std::move(result));
  }
  if (outcome.status == MinimizerStatus::diverged_energy) {
    throw SolveDiverged("line search failed to decrease the energy", std::move(result));
  }
  return result;
}

}  // namespace

SolveResult solve(const RadialProblem& problem, const InitialGuess& init, const SolveOptions& opts) {
  return run(problem, ChainBackend(problem.model()), init, opts, 1e-9, "radial");
}

SolveResult solve(const CartesianProblem& problem, const InitialGuess& init,
                  const SolveOptions& opts) {
  return run(problem, GraphBackend(problem.model(), opts.cg_tol), init, opts, 1e-7, "cart");
}

double verify_interior_bound(const RadialProblem& problem, const Field& u, double k0) {
  return interior_inf(problem, u, k0);
}

double verify_interior_bound(const CartesianProblem& problem, const Field& u, double k0) {
  return interior_inf(problem, u, k0);
}

double energy_of_solution(const RadialProblem& problem, const Field& u) {
  return energy(problem, u);
}

double energy_of_solution(const CartesianProblem& problem, const Field& u) {
  return energy(problem, u);
}

}  // namespace gljunction
