#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <cmath>
#include <optional>

namespace gljunction {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Symmetric tridiagonal matrix; `off[i]` couples rows i and i + 1.
struct Tridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;

  Eigen::Index size() const { return diag.size(); }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

/// LDL^T factorization of a symmetric tridiagonal matrix that doubles as a
/// positive-definiteness test.
class TridiagonalLdlt {
 public:
  /// nullopt if some pivot is not strictly positive.
  static std::optional<TridiagonalLdlt> factor(const Tridiagonal& t);

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

 private:
  Eigen::VectorXd pivots_;
  Eigen::VectorXd lower_;  // unit lower bidiagonal factor
};

struct CgResult {
  Eigen::VectorXd x;
  bool converged = false;
  bool negative_curvature = false;
  int iterations = 0;
  double relative_residual = 0.0;
};

/// Jacobi-preconditioned conjugate gradient that stops as soon as it meets
/// a direction p with p^T A p <= 0 (or a non-positive diagonal entry).
CgResult conjugate_gradient(const SparseMatrix& a, const Eigen::VectorXd& rhs, double rel_tol,
                            int max_iterations);

/// Lowest generalized eigenpair K x = lambda M x from inverse iteration.
struct ModeResult {
  double value = 0.0;
  Eigen::VectorXd vector;  // M-normalized, positive mass-weighted mean
  double residual = 0.0;   // ||K x - lambda M x|| / ||M x||
  int iterations = 0;
  bool converged = false;
};

/// Inverse iteration with a fixed shift sigma below the spectrum.
///
/// `solve_shifted(y)` must return (K - sigma M)^{-1} y, `apply(x)` must
/// return K x. Stops once residual <= rel_tol * max(1, |lambda|).
template <typename Solve, typename Apply>
ModeResult inverse_iteration(const Solve& solve_shifted, const Apply& apply,
                             const Eigen::VectorXd& mass, Eigen::VectorXd x, double rel_tol,
                             int max_iterations) {
  ModeResult out;
  auto normalize = [&](Eigen::VectorXd& v) {
    v /= std::sqrt(v.dot(mass.cwiseProduct(v)));
    if (mass.dot(v) < 0.0) v = -v;
  };
  normalize(x);
  for (int it = 1; it <= max_iterations; ++it) {
    x = solve_shifted(mass.cwiseProduct(x));
    normalize(x);
    const Eigen::VectorXd kx = apply(x);
    const Eigen::VectorXd mx = mass.cwiseProduct(x);
    out.value = x.dot(kx);
    out.residual = (kx - out.value * mx).norm() / mx.norm();
    out.iterations = it;
    if (out.residual <= rel_tol * std::max(1.0, std::abs(out.value))) {
      out.converged = true;
      break;
    }
  }
  out.vector = std::move(x);
  return out;
}

}  // namespace gljunction
