#include "gljunction/linalg.hpp"

#include <cmath>

#include "gljunction/error.hpp"

namespace gljunction {

Eigen::VectorXd Tridiagonal::apply(const Eigen::VectorXd& x) const {
  const Eigen::Index n = size();
  if (x.size() != n) throw GridMismatch("tridiagonal apply: size mismatch");
  Eigen::VectorXd y = diag.cwiseProduct(x);
  if (n > 1) {
    y.head(n - 1) += off.cwiseProduct(x.tail(n - 1));
    y.tail(n - 1) += off.cwiseProduct(x.head(n - 1));
  }
  return y;
}

std::optional<TridiagonalLdlt> TridiagonalLdlt::factor(const Tridiagonal& t) {
  const Eigen::Index n = t.size();
  TridiagonalLdlt f;
  f.pivots_.resize(n);
  f.lower_.resize(n > 0 ? n - 1 : 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    double d = t.diag[i];
    if (i > 0) d -= f.lower_[i - 1] * t.off[i - 1];
    // relative guard: a pivot lost to cancellation counts as singular
    if (!(d > 1e-14 * std::abs(t.diag[i]))) return std::nullopt;
    f.pivots_[i] = d;
    if (i + 1 < n) f.lower_[i] = t.off[i] / d;
  }
  return f;
}

Eigen::VectorXd TridiagonalLdlt::solve(const Eigen::VectorXd& rhs) const {
  const Eigen::Index n = pivots_.size();
  if (rhs.size() != n) throw GridMismatch("tridiagonal solve: size mismatch");
  Eigen::VectorXd x = rhs;
  for (Eigen::Index i = 1; i < n; ++i) x[i] -= lower_[i - 1] * x[i - 1];
  x.array() /= pivots_.array();
  for (Eigen::Index i = n - 2; i >= 0; --i) x[i] -= lower_[i] * x[i + 1];
  return x;
}

CgResult conjugate_gradient(const SparseMatrix& a, const Eigen::VectorXd& rhs, double rel_tol,
                            int max_iterations) {
  CgResult out;
  out.x = Eigen::VectorXd::Zero(rhs.size());
  const Eigen::VectorXd diag = a.diagonal();
  if ((diag.array() <= 0.0).any()) {
    out.negative_curvature = true;
    return out;
  }
  const Eigen::VectorXd inv_diag = diag.cwiseInverse();
  const double rhs_norm = rhs.norm();
  if (rhs_norm == 0.0) {
    out.converged = true;
    return out;
  }

  Eigen::VectorXd r = rhs;
  Eigen::VectorXd z = inv_diag.cwiseProduct(r);
  Eigen::VectorXd p = z;
  Eigen::VectorXd ap(rhs.size());
  double rz = r.dot(z);
  for (int it = 1; it <= max_iterations; ++it) {
    ap.noalias() = a * p;
    const double curvature = p.dot(ap);
    if (!(curvature > 0.0)) {
      out.negative_curvature = true;
      out.iterations = it;
      return out;
    }
    const double alpha = rz / curvature;
    out.x += alpha * p;
    r -= alpha * ap;
    out.iterations = it;
    out.relative_residual = r.norm() / rhs_norm;
    if (out.relative_residual <= rel_tol) {
      out.converged = true;
      return out;
    }
    z = inv_diag.cwiseProduct(r);
    const double rz_next = r.dot(z);
    p = z + (rz_next / rz) * p;
    rz = rz_next;
  }
  return out;
}

}  // namespace gljunction
