#pragma once

#include <variant>

#include "gljunction/assembly.hpp"

namespace gljunction {

/// Lowest eigenvalue of the linearized energy
///   Q(phi) = int_{Omega_1} |grad phi|^2 - phi^2/eps^2
///          + int_{Omega_2} |grad phi|^2/m + a phi^2/eps^2
/// over unit-L2 phi, together with the min-max upper bound built from
/// Dirichlet eigenvalues of the two subdomains.
struct EigenReport {
  double lambda1 = 0.0;
  Field eigenfunction;  // unit discrete L2 norm, positive mean
  double residual = 0.0;
  int iterations = 0;
  double shift = 0.0;
  double dirichlet_inner = 0.0;  // lambda_1(Omega_1), Dirichlet
  double dirichlet_outer = 0.0;  // lambda_1(Omega_2), Dirichlet
  double minmax_bound = 0.0;     // min(lambda_1(Omega_1) - 1/eps^2, lambda_1(Omega_2)/m + a/eps^2)
  bool bound_satisfied = false;
};

/// Shifted inverse iteration with sigma = -1/eps^2 - 1, which lies strictly
/// below the spectrum. Throws NonConvergence if the residual does not reach
/// 1e-8 max(1, |lambda|).
EigenReport lambda1(const RadialProblem& problem, int max_iterations = 100000);
EigenReport lambda1(const CartesianProblem& problem, int max_iterations = 5000);

/// Discrete Rayleigh quotient Q(phi) / ||phi||^2.
double rayleigh_quotient(const RadialProblem& problem, const Field& phi);
double rayleigh_quotient(const CartesianProblem& problem, const Field& phi);

struct Disk {
  double radius = 1.0;
};
struct Annulus {
  double inner = 1.0;
  double outer = 2.0;
};
using DirichletDomain = std::variant<Disk, Annulus>;

/// First Dirichlet eigenvalue of -Laplace on a radial grid with `intervals`
/// uniform intervals.
double dirichlet_lambda1(const DirichletDomain& domain, int intervals);

enum class Regime { trivial, nontrivial, indeterminate };

const char* to_string(Regime regime);

/// Sign of lambda1, with |lambda1| < 1e-10 reported as indeterminate.
Regime classify(double lambda1);
Regime classify(const EigenReport& report);

}  // namespace gljunction
