#pragma once

#include <Eigen/Core>

#include "gljunction/energy.hpp"
#include "gljunction/geometry.hpp"
#include "gljunction/params.hpp"

namespace gljunction {

/// Nodal values of the order parameter.
using Field = Eigen::VectorXd;

/// Radially symmetric reduction of the energy on a disk-in-disk domain.
///
/// Uniform nodes r_i = i h on [0, r2] with r1 and r2 on nodes. Gradient
/// term: 2 pi sum_i c_i (u_{i+1} - u_i)^2 / h * r_{i+1/2}, with c_i = 1 or
/// 1/m chosen by the edge midpoint. Potentials use trapezoid weights
/// 2 pi r_i h (half at r2); the interface node gives half its weight to
/// each side. The origin carries no potential weight; its regularity
/// (u'(0) = 0) comes out of the midpoint radii.
class RadialProblem {
 public:
  RadialProblem(const DiskInDisk& geometry, const Params& params, int intervals);

  const DiskInDisk& geometry() const noexcept { return geometry_; }
  const Params& params() const noexcept { return params_; }
  const ChainEnergy& model() const noexcept { return energy_; }

  Eigen::Index size() const noexcept { return radii_.size(); }
  int intervals() const noexcept { return static_cast<int>(radii_.size()) - 1; }
  double spacing() const noexcept { return spacing_; }
  Eigen::Index interface_index() const noexcept { return interface_index_; }
  const Eigen::VectorXd& radii() const noexcept { return radii_; }
  /// Signed distance t(x) = r1 - r at each node.
  const Eigen::VectorXd& distances() const noexcept { return distances_; }

 private:
  DiskInDisk geometry_;
  Params params_;
  double spacing_;
  Eigen::Index interface_index_;
  Eigen::VectorXd radii_;
  Eigen::VectorXd distances_;
  ChainEnergy energy_;
};

/// Smallest interval count with h <= max_spacing for which both r1 and r2
/// fall on nodes. Throws InvalidArgument if r2/r1 is not a ratio of small
/// integers.
int radial_intervals_for(const DiskInDisk& g, double max_spacing);

/// Nodes of the square lattice h Z^2 inside the closed disk of radius r2.
///
/// Edges join lattice neighbours that are both inside; an edge's coefficient
/// (1 or 1/m) comes from the region of its midpoint and a node's potential
/// from the region of the node (split evenly when it sits on the interface).
/// Missing edges at the staircase boundary give the natural no-flux
/// condition.
class CartesianProblem {
 public:
  CartesianProblem(const DiskInDisk& geometry, const Params& params, double spacing);

  const DiskInDisk& geometry() const noexcept { return geometry_; }
  const Params& params() const noexcept { return params_; }
  const GraphEnergy& model() const noexcept { return energy_; }

  Eigen::Index size() const noexcept { return points_.rows(); }
  double spacing() const noexcept { return spacing_; }
  const Eigen::Matrix<double, Eigen::Dynamic, 2>& points() const noexcept { return points_; }
  const Eigen::VectorXd& distances() const noexcept { return distances_; }

 private:
  DiskInDisk geometry_;
  Params params_;
  double spacing_;
  Eigen::Matrix<double, Eigen::Dynamic, 2> points_;
  Eigen::VectorXd distances_;
  GraphEnergy energy_;
};

double energy(const RadialProblem& problem, const Field& u);
double energy(const CartesianProblem& problem, const Field& u);
Field gradient(const RadialProblem& problem, const Field& u);
Field gradient(const CartesianProblem& problem, const Field& u);
Field hessian_apply(const RadialProblem& problem, const Field& u, const Field& v);
Field hessian_apply(const CartesianProblem& problem, const Field& u, const Field& v);

/// Laplacian at r = 0 implied by the discrete energy: minus the diffusive
/// gradient at the origin over twice the origin cell area 2 pi (h^2 / 8).
double origin_laplacian(const RadialProblem& problem, const Field& u);

/// Linear interpolation in r = |x| onto the Cartesian nodes.
Field interpolate_radial_to_cartesian(const RadialProblem& radial, const Field& u,
                                      const CartesianProblem& cartesian);

/// Discrete interface fluxes at r1 of a radial field: inside uses the edge
/// just below r1 with coefficient 1, outside the edge just above with 1/m.
struct InterfaceFlux {
  double inner = 0.0;
  double outer = 0.0;  // already multiplied by 1/m
};
InterfaceFlux interface_flux(const RadialProblem& problem, const Field& u);

/// At least `nodes_per_eps` nodes per eps of length; the layer region
/// |t| < 8 eps then holds at least 16 * nodes_per_eps nodes.
bool resolution_ok(double spacing, double eps, double nodes_per_eps = 12.0);

}  // namespace gljunction
