#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gljunction/energy.hpp"
#include "gljunction/linalg.hpp"

namespace gljunction {

enum class StepKind { newton, shifted_newton, gradient, saddle_escape, polish };

std::string to_string(StepKind kind);

struct TraceEntry {
  int iteration = 0;
  double energy = 0.0;
  double grad_norm = 0.0;
  double step_length = 0.0;  // accepted line-search parameter
  StepKind kind = StepKind::newton;
};

enum class MinimizerStatus { converged, non_convergence, diverged_energy };

struct MinimizerOptions {
  double grad_tol = 1e-9;       // on ||gradient||_inf
  double step_tol = 1e-6;       // on ||Newton step||_inf
  int max_iterations = 500;
  bool abs_restart = true;      // replace u by |u| once min(u) < -1e-8
  double armijo = 1e-4;
  double min_alpha = 1e-12;
};

struct MinimizerOutcome {
  MinimizerStatus status = MinimizerStatus::non_convergence;
  int iterations = 0;
  double energy = 0.0;
  double grad_norm = 0.0;
  int abs_restarts = 0;
  std::vector<TraceEntry> trace;
};

/// Negative-curvature probe: lowest eigenpair of the Hessian in the mass
/// metric.
struct CurvatureMode {
  double value = 0.0;
  Eigen::VectorXd vector;
};

/// Newton backend for path-graph energies: direct tridiagonal solves.
class ChainBackend {
 public:
  explicit ChainBackend(const ChainEnergy& energy) : energy_(energy) {}

  const ChainEnergy& model() const { return energy_; }
  /// Solves (H + shift M) d = -g; nullopt if that matrix is not positive
  /// definite.
  std::optional<Eigen::VectorXd> newton_direction(const Eigen::VectorXd& u,
                                                  const Eigen::VectorXd& g, double shift) const;
  CurvatureMode lowest_mode(const Eigen::VectorXd& u) const;

 private:
  const ChainEnergy& energy_;
};

/// Newton backend for general graphs: Jacobi-preconditioned CG that reports
/// negative curvature.
class GraphBackend {
 public:
  explicit GraphBackend(const GraphEnergy& energy, double cg_tol = 1e-8, int cg_max = 20000)
      : energy_(energy), cg_tol_(cg_tol), cg_max_(cg_max) {}

  const GraphEnergy& model() const { return energy_; }
  std::optional<Eigen::VectorXd> newton_direction(const Eigen::VectorXd& u,
                                                  const Eigen::VectorXd& g, double shift) const;
  CurvatureMode lowest_mode(const Eigen::VectorXd& u) const;

 private:
  const GraphEnergy& energy_;
  double cg_tol_;
  int cg_max_;
};

/// Damped Newton minimization of a discrete energy with Armijo backtracking.
///
/// Each iteration tries a plain Newton step; if the Hessian is indefinite it
/// shifts it by mu M (mu grows by 4x up to the certified shift), and falls
/// back to steepest descent when no descent direction results. At a critical
/// point with negative curvature the iterate is pushed along the lowest
/// Hessian mode. Convergence requires ||g||_inf < grad_tol and a Newton step
/// no larger than step_tol; that last step is applied before returning.
template <typename Backend>
MinimizerOutcome minimize_energy(const Backend& backend, Eigen::VectorXd& u,
                                 const MinimizerOptions& opts) {
  const auto& model = backend.model();
  const double certified = model.potential().certified_shift();
  MinimizerOutcome out;
  double e = model.energy(u);
  double last_shift = 0.0;

  auto restart_abs = [&] {
    if (opts.abs_restart && u.minCoeff() < -1e-8) {
      u = u.cwiseAbs();
      e = model.energy(u);
      ++out.abs_restarts;
    }
  };

  bool done = false;
  int it = 0;
  for (; it < opts.max_iterations && !done; ++it) {
    const Eigen::VectorXd g = model.gradient(u);
    const double gn = g.template lpNorm<Eigen::Infinity>();
    TraceEntry entry{it, e, gn, 0.0, StepKind::newton};

    std::optional<Eigen::VectorXd> d = backend.newton_direction(u, g, 0.0);
    if (d && gn < opts.grad_tol && d->template lpNorm<Eigen::Infinity>() <= opts.step_tol) {
      const Eigen::VectorXd trial = u + *d;
      const double e_trial = model.energy(trial);
      if (e_trial <= e + 1e-12 * std::max(1.0, std::abs(e))) {
        u = trial;
        e = e_trial;
        entry.step_length = 1.0;
      }
      entry.kind = StepKind::polish;
      out.trace.push_back(entry);
      restart_abs();
      out.status = MinimizerStatus::converged;
      done = true;
      break;
    }

    if (!d && gn < opts.grad_tol) {
      const CurvatureMode mode = backend.lowest_mode(u);
      if (!(mode.value < 0.0)) {
        out.trace.push_back(entry);
        out.status = MinimizerStatus::converged;
        done = true;
        break;
      }
      Eigen::VectorXd v = mode.vector / mode.vector.template lpNorm<Eigen::Infinity>();
      if (model.mass().dot(v) < 0.0) v = -v;
      if (g.dot(v) > 0.0) v = -v;
      bool moved = false;
      for (double alpha = 1.0; alpha >= opts.min_alpha; alpha *= 0.5) {
        const Eigen::VectorXd trial = u + alpha * v;
        const double e_trial = model.energy(trial);
        if (e_trial < e) {
          u = trial;
          e = e_trial;
          entry.step_length = alpha;
          moved = true;
          break;
        }
      }
      entry.kind = StepKind::saddle_escape;
      out.trace.push_back(entry);
      if (!moved) {
        out.status = MinimizerStatus::converged;
        done = true;
        break;
      }
      restart_abs();
      continue;
    }

    if (!d) {
      double shift = std::max(0.25 * last_shift, 1e-3 * certified);
      while (!d && shift <= certified) {
        d = backend.newton_direction(u, g, shift);
        if (!d) shift *= 4.0;
      }
      if (!d) d = backend.newton_direction(u, g, certified);
      last_shift = shift;
      entry.kind = StepKind::shifted_newton;
    }
    if (!d || !(g.dot(*d) < 0.0)) {
      d = -g / std::max(gn, 1e-300);
      entry.kind = StepKind::gradient;
    }

    const double slope = g.dot(*d);
    bool accepted = false;
    if (entry.kind != StepKind::gradient) {
      // energy differences below rounding: judge the full step by the gradient
      const Eigen::VectorXd trial = u + *d;
      const double e_trial = model.energy(trial);
      const double noise = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(e));
      if (std::abs(slope) < noise && e_trial <= e + noise &&
          model.gradient(trial).template lpNorm<Eigen::Infinity>() < gn) {
        u = trial;
        e = e_trial;
        entry.step_length = 1.0;
        accepted = true;
      }
    }
    for (double alpha = 1.0; !accepted && alpha >= opts.min_alpha; alpha *= 0.5) {
      const Eigen::VectorXd trial = u + alpha * *d;
      const double e_trial = model.energy(trial);
      if (e_trial <= e + opts.armijo * alpha * slope) {
        u = trial;
        e = e_trial;
        entry.step_length = alpha;
        accepted = true;
        break;
      }
    }
    out.trace.push_back(entry);
    if (!accepted) {
      out.status = gn < opts.grad_tol ? MinimizerStatus::converged
                                      : MinimizerStatus::diverged_energy;
      done = true;
      break;
    }
    restart_abs();
  }

  out.iterations = static_cast<int>(out.trace.size());
  out.energy = e;
  out.grad_norm = model.gradient(u).template lpNorm<Eigen::Infinity>();
  if (!done) out.status = MinimizerStatus::non_convergence;
  return out;
}

}  // namespace gljunction
