#include "gljunction/asymptotics.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gljunction/error.hpp"
#include "gljunction/profile.hpp"

namespace gljunction {

namespace {

template <typename Problem>
LayerError layer_error_impl(const Problem& problem, const Field& u, double tube_width) {
  if (u.size() != problem.size()) throw GridMismatch("layer_error: field size");
  const Profile1D profile(problem.params());
  const double eps = problem.params().eps();
  LayerError out;
  out.tube_width = tube_width;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double t = problem.distances()[i];
    const double err = std::abs(u[i] - profile.value(t / eps));
    out.sup_all = std::max(out.sup_all, err);
    if (std::abs(t) <= tube_width * eps) out.sup_tube = std::max(out.sup_tube, err);
  }
  return out;
}

struct LineFit {
  double slope = 0.0;
  double residual = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = x[static_cast<std::size_t>(i)];
    design(i, 1) = 1.0;
    rhs[i] = y[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  return {coef[0], std::sqrt((design * coef - rhs).squaredNorm() / static_cast<double>(n))};
}

// Below this the tails are dominated by rounding of u near 1 or by the
// discretization floor.
constexpr double kFloor = 1e-14;
constexpr std::size_t kMinSamples = 10;

template <typename Problem>
AgmonRates agmon_impl(const Problem& problem, const Field& u, const FitWindow& inner,
                      const FitWindow& outer) {
  if (u.size() != problem.size()) throw GridMismatch("agmon_fit: field size");
  std::vector<double> xi, yi, xo, yo;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double t = problem.distances()[i];
    if (t >= inner.lo && t <= inner.hi) {
      const double gap = 1.0 - u[i];
      if (!(gap > kFloor)) {
        throw NonPositiveValues("1 - u reached the floating-point floor at t = " +
                                std::to_string(t));
      }
      xi.push_back(t);
      yi.push_back(std::log(gap));
    } else if (-t >= outer.lo && -t <= outer.hi) {
      if (!(u[i] > std::numeric_limits<double>::min())) {
        throw NonPositiveValues("u is not positive at t = " + std::to_string(t));
      }
      xo.push_back(-t);
      yo.push_back(std::log(u[i]));
    }
  }
  if (xi.size() < kMinSamples || xo.size() < kMinSamples) {
    throw WindowTooNarrow("fit window holds " + std::to_string(std::min(xi.size(), xo.size())) +
                          " nodes, need " + std::to_string(kMinSamples));
  }
  const LineFit fi = fit_line(xi, yi);
  const LineFit fo = fit_line(xo, yo);
  AgmonRates out;
  out.inner = -fi.slope;
  out.outer = -fo.slope;
  out.inner_residual = fi.residual;
  out.outer_residual = fo.residual;
  out.inner_samples = static_cast<int>(xi.size());
  out.outer_samples = static_cast<int>(xo.size());
  return out;
}

}  // namespace

LayerError layer_error(const RadialProblem& problem, const Field& u, double tube_width) {
  return layer_error_impl(problem, u, tube_width);
}

LayerError layer_error(const CartesianProblem& problem, const Field& u, double tube_width) {
  return layer_error_impl(problem, u, tube_width);
}

FitWindow default_agmon_window(const Params& p, const DiskInDisk& g) {
  const double eps = p.eps();
  return {5.0 * eps, std::min({20.0 * eps, 0.5 * g.r1(), 0.5 * (g.r2() - g.r1())})};
}

AgmonRates agmon_fit(const RadialProblem& problem, const Field& u, const FitWindow& inner,
                     const FitWindow& outer) {
  return agmon_impl(problem, u, inner, outer);
}

AgmonRates agmon_fit(const CartesianProblem& problem, const Field& u, const FitWindow& inner,
                     const FitWindow& outer) {
  return agmon_impl(problem, u, inner, outer);
}

FitReport energy_expansion_fit(std::span<const EnergyRun> runs, const Params& p,
                               const DiskInDisk& g, double flag_fraction) {
  std::vector<EnergyRun> sorted(runs.begin(), runs.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const EnergyRun& x, const EnergyRun& y) { return x.eps < y.eps; });
  const bool distinct =
      std::adjacent_find(sorted.begin(), sorted.end(), [](const EnergyRun& x, const EnergyRun& y) {
        return x.eps == y.eps;
      }) == sorted.end();
  if (sorted.size() < 3 || !distinct) {
    throw InsufficientRuns("energy fit needs at least 3 runs at distinct eps, got " +
                           std::to_string(sorted.size()));
  }
  for (const EnergyRun& run : sorted) {
    if (!(run.eps > 0.0) || !std::isfinite(run.energy)) {
      throw InvalidArgument("energy fit: runs need eps > 0 and finite energy");
    }
  }

  const auto n = static_cast<Eigen::Index>(sorted.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd energy(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double eps = sorted[static_cast<std::size_t>(i)].eps;
    design(i, 0) = 1.0 / eps;
    design(i, 1) = 1.0;
    design(i, 2) = eps;
    energy[i] = sorted[static_cast<std::size_t>(i)].energy;
  }
  const double rms_scale = 1.0 / std::sqrt(static_cast<double>(n));

  FitReport out;
  out.runs = static_cast<int>(n);
  out.eps_min = sorted.front().eps;
  out.eps_max = sorted.back().eps;

  const Eigen::MatrixXd two = design.leftCols(2);
  const Eigen::Vector2d pq = two.colPivHouseholderQr().solve(energy);
  out.p = pq[0];
  out.q = pq[1];
  out.residual_rms = (two * pq - energy).norm() * rms_scale;

  const Eigen::Vector3d pqr = design.colPivHouseholderQr().solve(energy);
  out.p_corrected = pqr[0];
  out.q_corrected = pqr[1];
  out.r_corrected = pqr[2];
  out.corrected_residual_rms = (design * pqr - energy).norm() * rms_scale;

  ProfileConstants constants = derive_constants(p);
  fill_quadrature(constants, p);
  out.c1_quad = constants.c1_quad->total();
  out.c2_quad = constants.c2_quad->total();
  out.c1_closed = constants.c1_closed.total();
  out.c2_closed = constants.c2_closed.total();
  out.p_target = out.c1_quad * g.interface_length();
  out.q_target = -out.c2_quad * total_curvature(g);

  auto rel = [](double value, double target) { return std::abs(value - target) / std::abs(target); };
  out.p_rel_dev = rel(out.p, out.p_target);
  out.q_rel_dev = rel(out.q, out.q_target);
  out.p_corrected_rel_dev = rel(out.p_corrected, out.p_target);
  out.q_corrected_rel_dev = rel(out.q_corrected, out.q_target);
  out.flagged = out.residual_rms > flag_fraction * std::abs(out.q_target);
  return out;
}

}  // namespace gljunction
