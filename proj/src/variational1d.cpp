#include "gljunction/variational1d.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "gljunction/error.hpp"
#include "gljunction/profile.hpp"

namespace gljunction {

Grid1D::Grid1D(double half_length, double spacing)
    : half_length_(half_length), spacing_(spacing) {
  if (!(half_length > 0.0) || !(spacing > 0.0) || spacing > half_length) {
    throw InvalidArgument("Grid1D needs 0 < h <= L");
  }
  const double ratio = half_length / spacing;
  half_intervals_ = static_cast<Eigen::Index>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(half_intervals_)) > 1e-9 * ratio) {
    throw InvalidArgument("Grid1D needs L/h integral so that t = 0 is a node");
  }
}

Eigen::VectorXd Grid1D::nodes() const {
  Eigen::VectorXd t(size());
  for (Eigen::Index i = 0; i < size(); ++i) t[i] = node(i);
  return t;
}

double default_truncation(const Params& p) {
  return std::max({40.0, 20.0 / std::sqrt(p.a() * p.m()), 20.0 / std::sqrt(2.0)});
}

ChainEnergy discrete_functional(const Grid1D& grid, const Params& p) {
  const Eigen::Index n = grid.size();
  const Eigen::Index mid = grid.interface_index();
  const double h = grid.spacing();

  Eigen::VectorXd conductance(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    conductance[i] = (i >= mid ? 1.0 : 1.0 / p.m()) / h;
  }
  Eigen::VectorXd weight = Eigen::VectorXd::Constant(n, h);
  weight[0] *= 0.5;
  weight[n - 1] *= 0.5;

  Eigen::VectorXd inner = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd outer = Eigen::VectorXd::Zero(n);
  inner.tail(n - mid - 1) = weight.tail(n - mid - 1);
  outer.head(mid) = weight.head(mid);
  inner[mid] = 0.5 * weight[mid];
  outer[mid] = 0.5 * weight[mid];
  return ChainEnergy(std::move(conductance), std::move(inner), std::move(outer),
                     Potential{0.5, p.a()});
}

DiscreteProfile minimize_F(const Grid1D& grid, const Params& p, const Eigen::VectorXd& init,
                           double grad_tol, int max_iterations) {
  if (init.size() != grid.size()) throw GridMismatch("minimize_F: init does not match grid");
  const ChainEnergy energy = discrete_functional(grid, p);

  MinimizerOptions opts;
  opts.grad_tol = grad_tol;
  opts.max_iterations = max_iterations;
  opts.abs_restart = false;

  DiscreteProfile out;
  out.values = init;
  const MinimizerOutcome outcome = minimize_energy(ChainBackend(energy), out.values, opts);
  out.iterations = outcome.iterations;
  out.trace = outcome.trace;
  if (outcome.status != MinimizerStatus::converged) {
    throw NonConvergence("minimize_F did not converge in " + std::to_string(max_iterations) +
                         " iterations (|grad| = " + std::to_string(outcome.grad_norm) + ")");
  }

  const double overshoot =
      std::max(-out.values.minCoeff(), out.values.maxCoeff() - 1.0);
  if (overshoot >= 1e-12) {
    throw OvershootBeyondTolerance("minimize_F result leaves [0, 1] by " +
                                   std::to_string(overshoot));
  }
  out.values = out.values.cwiseMax(0.0).cwiseMin(1.0);
  out.energy = energy.energy(out.values);
  return out;
}

Eigen::VectorXd sample_profile(const Grid1D& grid, const Params& p) {
  return Profile1D(p).values(grid.nodes().array()).matrix();
}

Eigen::VectorXd uniform_random_field(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    // (k + 0.5) / 2^53 lies strictly inside (0, 1)
    out[i] = (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
  }
  return out;
}

}  // namespace gljunction
