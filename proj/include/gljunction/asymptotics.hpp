#pragma once

#include <span>

#include "gljunction/assembly.hpp"

namespace gljunction {

/// Distance between a solution and the boundary-layer ansatz U(t(x)/eps).
struct LayerError {
  double sup_all = 0.0;   // over every node
  double sup_tube = 0.0;  // over |t(x)| <= tube_width * eps
  double tube_width = 10.0;
};

LayerError layer_error(const RadialProblem& problem, const Field& u, double tube_width = 10.0);
LayerError layer_error(const CartesianProblem& problem, const Field& u, double tube_width = 10.0);

/// Closed interval of |t| values used for an exponential fit.
struct FitWindow {
  double lo = 0.0;
  double hi = 0.0;
};

/// [5 eps, min(20 eps, r1/2, (r2 - r1)/2)]: clear of the layer core and of
/// the floating-point floor of the tails.
FitWindow default_agmon_window(const Params& p, const DiskInDisk& g);

struct AgmonRates {
  double inner = 0.0;  // decay rate of 1 - u into Omega_1, per unit length
  double outer = 0.0;  // decay rate of u into Omega_2
  double inner_residual = 0.0;  // rms of the log-linear fit
  double outer_residual = 0.0;
  int inner_samples = 0;
  int outer_samples = 0;
};

/// Least-squares slopes of log(1 - u) against t on t in `inner` and of
/// log(u) against |t| on -t in `outer`. Throws WindowTooNarrow with fewer
/// than 10 nodes in a window and NonPositiveValues when the fitted quantity
/// has hit the floating-point floor.
AgmonRates agmon_fit(const RadialProblem& problem, const Field& u, const FitWindow& inner,
                     const FitWindow& outer);
AgmonRates agmon_fit(const CartesianProblem& problem, const Field& u, const FitWindow& inner,
                     const FitWindow& outer);

struct EnergyRun {
  double eps = 0.0;
  double energy = 0.0;
};

/// Fit of G0(eps) against the two-term expansion.
///
/// (p, q) is the least-squares fit of G0 = p/eps + q. The corrected triple
/// (p, q, r) fits G0 = p/eps + q + r eps, i.e. it also absorbs a remainder
/// linear in eps. Targets come from the quadrature values of c1 and c2.
struct FitReport {
  int runs = 0;
  double eps_min = 0.0;
  double eps_max = 0.0;

  double p = 0.0;
  double q = 0.0;
  double residual_rms = 0.0;
  bool flagged = false;  // residual_rms exceeds flag_fraction * |q_target|

  double p_corrected = 0.0;
  double q_corrected = 0.0;
  double r_corrected = 0.0;
  double corrected_residual_rms = 0.0;

  double p_target = 0.0;  // c1 |d Omega_1|
  double q_target = 0.0;  // -c2 int kappa ds
  double p_rel_dev = 0.0;
  double q_rel_dev = 0.0;
  double p_corrected_rel_dev = 0.0;
  double q_corrected_rel_dev = 0.0;

  double c1_quad = 0.0;
  double c2_quad = 0.0;
  double c1_closed = 0.0;
  double c2_closed = 0.0;
};

/// Throws InsufficientRuns with fewer than three distinct eps values.
/// Runs are sorted by eps first, so the result does not depend on their
/// order.
FitReport energy_expansion_fit(std::span<const EnergyRun> runs, const Params& p,
                               const DiskInDisk& g, double flag_fraction = 0.1);

}  // namespace gljunction
