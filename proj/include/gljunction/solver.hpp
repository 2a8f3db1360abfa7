#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gljunction/assembly.hpp"
#include "gljunction/error.hpp"
#include "gljunction/minimizer.hpp"

namespace gljunction {

/// U(t(x)/eps), the boundary-layer test function.
struct RampInit {};
struct ConstantInit {
  double value = 0.5;
};
/// Independent uniform (0, 1) nodal values.
struct RandomInit {
  std::uint64_t seed = 0;
};
struct FieldInit {
  Field values;
};
using InitialGuess = std::variant<RampInit, ConstantInit, RandomInit, FieldInit>;

std::string init_kind(const InitialGuess& init);

struct SolveOptions {
  std::optional<double> grad_tol;  // default 1e-9 radial, 1e-7 Cartesian
  double step_tol = 1e-6;
  int max_iterations = 500;
  double k0 = 5.0;  // interior region t(x) >= k0 eps
  double cg_tol = 1e-8;
};

struct SolveReport {
  std::string mode;
  std::string status;
  bool converged = false;
  int iterations = 0;
  double tolerance = 0.0;
  double grad_norm = 0.0;
  double energy = 0.0;
  double normal_state_energy = 0.0;  // G0(0) = |Omega_1| / (2 eps^2)
  double min_u = 0.0;
  double max_u = 0.0;
  double sup_norm = 0.0;
  bool strictly_between = false;  // 0 < u < 1 (1e-10 slack at the outer rim)
  double k0 = 0.0;
  std::optional<double> interior_inf;
  std::string init_kind;
  std::optional<std::uint64_t> seed;
  int abs_restarts = 0;
  bool resolution_ok = false;
};

struct SolveResult {
  Field u;
  SolveReport report;
  std::vector<TraceEntry> trace;
};

/// Budget exhausted; carries the last iterate and its report.
class SolveNonConvergence : public NonConvergence {
 public:
  SolveNonConvergence(const std::string& what, SolveResult result)
      : NonConvergence(what), result_(std::move(result)) {}
  const SolveResult& result() const noexcept { return result_; }

 private:
  SolveResult result_;
};

class SolveDiverged : public DivergedEnergy {
 public:
  SolveDiverged(const std::string& what, SolveResult result)
      : DivergedEnergy(what), result_(std::move(result)) {}
  const SolveResult& result() const noexcept { return result_; }

 private:
  SolveResult result_;
};

/// Minimizes the discrete energy (solving the discrete Euler-Lagrange
/// system). Radial problems use direct tridiagonal Newton solves, Cartesian
/// problems CG. The iterate is replaced by |u| whenever it dips below -1e-8.
SolveResult solve(const RadialProblem& problem, const InitialGuess& init,
                  const SolveOptions& opts = {});
SolveResult solve(const CartesianProblem& problem, const InitialGuess& init,
                  const SolveOptions& opts = {});

/// inf of u over the nodes with t(x) >= k0 eps. Throws EmptyRegion when no
/// node qualifies (in particular when k0 eps >= r1).
double verify_interior_bound(const RadialProblem& problem, const Field& u, double k0);
double verify_interior_bound(const CartesianProblem& problem, const Field& u, double k0);

/// G0(u); an estimate of the minimal energy when u is a converged solution.
double energy_of_solution(const RadialProblem& problem, const Field& u);
double energy_of_solution(const CartesianProblem& problem, const Field& u);

}  // namespace gljunction
