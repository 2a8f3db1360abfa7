#pragma once

#include <Eigen/Core>

namespace gljunction {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point rule from the eigen-decomposition of the Jacobi matrix
/// (Golub-Welsch).
GaussRule gauss_legendre(int n);

/// Composite Gauss-Legendre on [lo, hi] split into `panels` equal panels.
template <typename Integrand>
double integrate(const Integrand& f, double lo, double hi, int panels, const GaussRule& rule) {
  const double width = (hi - lo) / panels;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double mid = lo + (k + 0.5) * width;
    double panel = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
    }
    sum += 0.5 * width * panel;
  }
  return sum;
}

}  // namespace gljunction
