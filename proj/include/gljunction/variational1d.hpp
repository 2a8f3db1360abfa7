#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "gljunction/energy.hpp"
#include "gljunction/minimizer.hpp"
#include "gljunction/params.hpp"

namespace gljunction {

/// Uniform grid t_i = -L + i h on [-L, L] with the interface t = 0 on a node.
class Grid1D {
 public:
  Grid1D(double half_length, double spacing);

  double half_length() const noexcept { return half_length_; }
  double spacing() const noexcept { return spacing_; }
  Eigen::Index size() const noexcept { return 2 * half_intervals_ + 1; }
  Eigen::Index interface_index() const noexcept { return half_intervals_; }
  double node(Eigen::Index i) const { return (i - half_intervals_) * spacing_; }
  Eigen::VectorXd nodes() const;

 private:
  double half_length_;
  double spacing_;
  Eigen::Index half_intervals_;
};

/// max(40, 20/sqrt(am), 20/sqrt2): keeps both exponential tails far below
/// double precision at the truncation points.
double default_truncation(const Params& p);

/// Trapezoidal discretization of the 1D functional: unit conductance on
/// t > 0 cells, 1/m on t < 0 cells, the interface node splits its potential
/// weight evenly, endpoints are free.
ChainEnergy discrete_functional(const Grid1D& grid, const Params& p);

struct DiscreteProfile {
  Eigen::VectorXd values;
  double energy = 0.0;
  int iterations = 0;
  std::vector<TraceEntry> trace;
};

/// Minimizes the discrete 1D functional from `init`.
///
/// Throws NonConvergence when the iteration budget runs out and
/// OvershootBeyondTolerance if the minimizer leaves [0, 1] by more than
/// 1e-12; smaller excursions are clamped.
DiscreteProfile minimize_F(const Grid1D& grid, const Params& p, const Eigen::VectorXd& init,
                           double grad_tol = 1e-10, int max_iterations = 500);

/// Closed-form profile sampled at the grid nodes.
Eigen::VectorXd sample_profile(const Grid1D& grid, const Params& p);

/// Uniform (0, 1) samples from a seeded 64-bit Mersenne Twister; the mapping
/// to doubles uses the top 53 bits so the stream is identical across
/// standard libraries.
Eigen::VectorXd uniform_random_field(Eigen::Index n, std::uint64_t seed);

}  // namespace gljunction
