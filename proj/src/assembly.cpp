#include "gljunction/assembly.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "gljunction/error.hpp"

namespace gljunction {

using std::numbers::pi;

namespace {

Potential scaled_potential(const Params& p) {
  const double inv_eps2 = 1.0 / (p.eps() * p.eps());
  return Potential{0.5 * inv_eps2, p.a() * inv_eps2};
}

struct RadialLayout {
  double spacing;
  Eigen::Index interface_index;
  Eigen::VectorXd radii;
};

RadialLayout radial_layout(const DiskInDisk& g, int intervals) {
  if (intervals < 2) throw InvalidArgument("radial grid needs at least 2 intervals");
  const double h = g.r2() / intervals;
  const double ratio = g.r1() / h;
  const auto k = static_cast<Eigen::Index>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(k)) > 1e-9 * ratio || k < 1 || k >= intervals) {
    throw InvalidArgument("radial grid: r1 = " + std::to_string(g.r1()) +
                          " is not a node for n = " + std::to_string(intervals));
  }
  Eigen::VectorXd radii(intervals + 1);
  for (int i = 0; i <= intervals; ++i) radii[i] = i * h;
  radii[k] = g.r1();
  radii[intervals] = g.r2();
  return {h, k, std::move(radii)};
}

ChainEnergy radial_energy(const RadialLayout& layout, const Params& p) {
  const Eigen::VectorXd& r = layout.radii;
  const Eigen::Index n = r.size();
  const Eigen::Index k = layout.interface_index;
  const double h = layout.spacing;

  Eigen::VectorXd conductance(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double mid = 0.5 * (r[i] + r[i + 1]);
    conductance[i] = 2.0 * pi * (i < k ? 1.0 : 1.0 / p.m()) * mid / h;
  }
  Eigen::VectorXd weight = 2.0 * pi * h * r;
  weight[n - 1] *= 0.5;

  Eigen::VectorXd inner = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd outer = Eigen::VectorXd::Zero(n);
  inner.head(k) = weight.head(k);
  outer.tail(n - k - 1) = weight.tail(n - k - 1);
  inner[k] = 0.5 * weight[k];
  outer[k] = 0.5 * weight[k];
  return ChainEnergy(std::move(conductance), std::move(inner), std::move(outer),
                     scaled_potential(p));
}

void check_field(Eigen::Index expected, const Field& u, const char* what) {
  if (u.size() != expected) {
    throw GridMismatch(std::string(what) + ": field has " + std::to_string(u.size()) +
                       " values, expected " + std::to_string(expected));
  }
}

}  // namespace

RadialProblem::RadialProblem(const DiskInDisk& geometry, const Params& params, int intervals)
    : geometry_(geometry),
      params_(params),
      spacing_(0.0),
      interface_index_(0),
      energy_([&] {
        const RadialLayout layout = radial_layout(geometry, intervals);
        spacing_ = layout.spacing;
        interface_index_ = layout.interface_index;
        radii_ = layout.radii;
        return radial_energy(layout, params);
      }()) {
  distances_ = geometry_.r1() - radii_.array();
}

int radial_intervals_for(const DiskInDisk& g, double max_spacing) {
  if (!(max_spacing > 0.0)) throw InvalidArgument("grid spacing must be > 0");
  const double ratio = g.r2() / g.r1();
  // denominators q with r2/r1 = p/q; the inner intervals count must be a multiple of q
  int q = 0;
  for (int d = 1; d <= 1000; ++d) {
    const double num = ratio * d;
    if (std::abs(num - std::round(num)) < 1e-9 * num) {
      q = d;
      break;
    }
  }
  if (q == 0) throw InvalidArgument("r2/r1 must be a ratio of integers with denominator <= 1000");
  auto inner = static_cast<long long>(std::ceil(g.r1() / max_spacing - 1e-9));
  inner = ((inner + q - 1) / q) * q;
  return static_cast<int>(std::llround(static_cast<double>(inner) * ratio));
}

CartesianProblem::CartesianProblem(const DiskInDisk& geometry, const Params& params,
                                   double spacing)
    : geometry_(geometry),
      params_(params),
      spacing_(spacing),
      energy_([&] {
        if (!(spacing > 0.0) || spacing >= geometry.r1()) {
          throw InvalidArgument("Cartesian spacing must lie in (0, r1)");
        }
        const double r2 = geometry.r2();
        const auto k = static_cast<int>(std::ceil(r2 / spacing));
        const int side = 2 * k + 1;
        std::vector<int> index(static_cast<std::size_t>(side) * side, -1);
        std::vector<double> xs;
        std::vector<double> ys;
        auto inside = [&](int i, int j) {
          const double x = i * spacing;
          const double y = j * spacing;
          return std::hypot(x, y) <= r2 * (1.0 + 1e-12);
        };
        for (int j = -k; j <= k; ++j) {
          for (int i = -k; i <= k; ++i) {
            if (!inside(i, j)) continue;
            index[static_cast<std::size_t>(j + k) * side + (i + k)] = static_cast<int>(xs.size());
            xs.push_back(i * spacing);
            ys.push_back(j * spacing);
          }
        }
        const auto n = static_cast<Eigen::Index>(xs.size());
        points_.resize(n, 2);
        for (Eigen::Index i = 0; i < n; ++i) {
          points_(i, 0) = xs[static_cast<std::size_t>(i)];
          points_(i, 1) = ys[static_cast<std::size_t>(i)];
        }
        distances_.resize(n);
        for (Eigen::Index i = 0; i < n; ++i) {
          distances_[i] = signed_distance(points_.row(i).transpose(), geometry);
        }

        std::vector<int> from;
        std::vector<int> to;
        std::vector<double> conductance;
        auto add_edge = [&](int a, int b) {
          if (a < 0 || b < 0) return;
          const Point mid = 0.5 * (points_.row(a) + points_.row(b)).transpose();
          from.push_back(a);
          to.push_back(b);
          conductance.push_back(signed_distance(mid, geometry) >= 0.0 ? 1.0 : 1.0 / params.m());
        };
        for (int j = -k; j <= k; ++j) {
          for (int i = -k; i <= k; ++i) {
            const int here = index[static_cast<std::size_t>(j + k) * side + (i + k)];
            if (here < 0) continue;
            if (i < k) add_edge(here, index[static_cast<std::size_t>(j + k) * side + (i + k + 1)]);
            if (j < k) add_edge(here, index[static_cast<std::size_t>(j + k + 1) * side + (i + k)]);
          }
        }

        const double area = spacing * spacing;
        Eigen::VectorXd inner = Eigen::VectorXd::Zero(n);
        Eigen::VectorXd outer = Eigen::VectorXd::Zero(n);
        for (Eigen::Index i = 0; i < n; ++i) {
          const double t = distances_[i];
          if (std::abs(t) <= 1e-14 * geometry.r1()) {
            inner[i] = outer[i] = 0.5 * area;
          } else if (t > 0.0) {
            inner[i] = area;
          } else {
            outer[i] = area;
          }
        }
        return GraphEnergy(Eigen::Map<Eigen::VectorXi>(from.data(), static_cast<Eigen::Index>(from.size())),
                           Eigen::Map<Eigen::VectorXi>(to.data(), static_cast<Eigen::Index>(to.size())),
                           Eigen::Map<Eigen::VectorXd>(conductance.data(),
                                                       static_cast<Eigen::Index>(conductance.size())),
                           std::move(inner), std::move(outer), scaled_potential(params));
      }()) {}

double energy(const RadialProblem& problem, const Field& u) { return problem.model().energy(u); }
double energy(const CartesianProblem& problem, const Field& u) { return problem.model().energy(u); }
Field gradient(const RadialProblem& problem, const Field& u) { return problem.model().gradient(u); }
Field gradient(const CartesianProblem& problem, const Field& u) {
  return problem.model().gradient(u);
}
Field hessian_apply(const RadialProblem& problem, const Field& u, const Field& v) {
  return problem.model().hessian_apply(u, v);
}
Field hessian_apply(const CartesianProblem& problem, const Field& u, const Field& v) {
  return problem.model().hessian_apply(u, v);
}

double origin_laplacian(const RadialProblem& problem, const Field& u) {
  const Field g = problem.model().diffusion_gradient(u);
  const double h = problem.spacing();
  const double origin_area = 2.0 * pi * h * h / 8.0;
  return -g[0] / (2.0 * origin_area);
}

Field interpolate_radial_to_cartesian(const RadialProblem& radial, const Field& u,
                                      const CartesianProblem& cartesian) {
  check_field(radial.size(), u, "interpolate_radial_to_cartesian");
  if (std::abs(radial.geometry().r1() - cartesian.geometry().r1()) > 1e-12 ||
      radial.geometry().r2() < cartesian.geometry().r2() - 1e-12) {
    throw GridMismatch("interpolate_radial_to_cartesian: geometries differ");
  }
  const double h = radial.spacing();
  const Eigen::Index last = radial.size() - 1;
  Field out(cartesian.size());
  for (Eigen::Index i = 0; i < cartesian.size(); ++i) {
    const double r = cartesian.points().row(i).norm();
    const double s = std::min(r / h, static_cast<double>(last));
    const auto j = std::min(static_cast<Eigen::Index>(s), last - 1);
    const double w = s - static_cast<double>(j);
    out[i] = (1.0 - w) * u[j] + w * u[j + 1];
  }
  return out;
}

InterfaceFlux interface_flux(const RadialProblem& problem, const Field& u) {
  check_field(problem.size(), u, "interface_flux");
  const Eigen::Index k = problem.interface_index();
  const double h = problem.spacing();
  return {(u[k] - u[k - 1]) / h, (u[k + 1] - u[k]) / h / problem.params().m()};
}

bool resolution_ok(double spacing, double eps, double nodes_per_eps) {
  return eps / spacing >= nodes_per_eps - 1e-9;
}

}  // namespace gljunction
