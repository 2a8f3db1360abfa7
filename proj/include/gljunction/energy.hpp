#pragma once

#include <Eigen/Core>

#include "gljunction/linalg.hpp"

namespace gljunction {

/// Bulk potential densities: `well * (1 - u^2)^2` on superconducting
/// weight and `normal * u^2` on normal weight.
struct Potential {
  double well = 0.0;
  double normal = 0.0;

  double inner(double u) const {
    const double s = 1.0 - u * u;
    return well * s * s;
  }
  double inner_d1(double u) const { return -4.0 * well * u * (1.0 - u * u); }
  double inner_d2(double u) const { return well * (12.0 * u * u - 4.0); }
  double outer(double u) const { return normal * u * u; }
  double outer_d1(double u) const { return 2.0 * normal * u; }
  double outer_d2(double) const { return 2.0 * normal; }

  /// Smallest mu with H + mu M guaranteed positive definite.
  double certified_shift() const { return 4.0 * well + 1.0; }
};

/// Discrete energy on a path graph:
///   E(u) = sum_i k_i (u_{i+1} - u_i)^2
///        + sum_i [w1_i V1(u_i) + w2_i V2(u_i)].
/// Used for both the 1D functional and the radial reduction.
class ChainEnergy {
 public:
  ChainEnergy(Eigen::VectorXd conductance, Eigen::VectorXd inner_weight,
              Eigen::VectorXd outer_weight, Potential potential);

  Eigen::Index size() const { return inner_weight_.size(); }
  const Eigen::VectorXd& conductance() const { return conductance_; }
  const Eigen::VectorXd& inner_weight() const { return inner_weight_; }
  const Eigen::VectorXd& outer_weight() const { return outer_weight_; }
  const Eigen::VectorXd& mass() const { return mass_; }
  const Potential& potential() const { return potential_; }

  double energy(const Eigen::VectorXd& u) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const;
  /// Diffusive part of the gradient only.
  Eigen::VectorXd diffusion_gradient(const Eigen::VectorXd& u) const;
  Tridiagonal hessian(const Eigen::VectorXd& u) const;
  Eigen::VectorXd hessian_apply(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  /// Matrix of the quadratic part: phi^T K phi is the linearized energy.
  Tridiagonal quadratic_form() const;

 private:
  void check(const Eigen::VectorXd& u) const;

  Eigen::VectorXd conductance_;
  Eigen::VectorXd inner_weight_;
  Eigen::VectorXd outer_weight_;
  Eigen::VectorXd mass_;
  Potential potential_;
};

/// Same energy on a general graph given as an edge list.
class GraphEnergy {
 public:
  GraphEnergy(Eigen::VectorXi from, Eigen::VectorXi to, Eigen::VectorXd conductance,
              Eigen::VectorXd inner_weight, Eigen::VectorXd outer_weight, Potential potential);

  Eigen::Index size() const { return inner_weight_.size(); }
  Eigen::Index edges() const { return from_.size(); }
  const Eigen::VectorXd& mass() const { return mass_; }
  const Eigen::VectorXd& inner_weight() const { return inner_weight_; }
  const Eigen::VectorXd& outer_weight() const { return outer_weight_; }
  const Potential& potential() const { return potential_; }

  double energy(const Eigen::VectorXd& u) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const;
  SparseMatrix hessian(const Eigen::VectorXd& u) const;
  Eigen::VectorXd hessian_apply(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  SparseMatrix quadratic_form() const;

 private:
  void check(const Eigen::VectorXd& u) const;
  SparseMatrix assemble(const Eigen::VectorXd& diagonal, double edge_scale) const;

  Eigen::VectorXi from_;
  Eigen::VectorXi to_;
  Eigen::VectorXd conductance_;
  Eigen::VectorXd inner_weight_;
  Eigen::VectorXd outer_weight_;
  Eigen::VectorXd mass_;
  Potential potential_;
};

}  // namespace gljunction
