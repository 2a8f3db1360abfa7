#include "gljunction/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gljunction/error.hpp"
#include "gljunction/quadrature.hpp"

namespace gljunction {

using std::numbers::pi;

DiskInDisk::DiskInDisk(double r1, double r2) : r1_(r1), r2_(r2) {
  if (!(r1 > 0.0) || !std::isfinite(r1)) throw InvalidArgument("r1 must be > 0");
  if (!(r2 > r1) || !std::isfinite(r2)) throw InvalidArgument("r2 must be > r1");
}

double DiskInDisk::inner_area() const { return pi * r1_ * r1_; }
double DiskInDisk::outer_area() const { return pi * (r2_ * r2_ - r1_ * r1_); }
double DiskInDisk::interface_length() const { return 2.0 * pi * r1_; }

double signed_distance(const Point& x, const DiskInDisk& g) { return g.r1() - x.norm(); }

double curvature(double /*s*/, const DiskInDisk& g) { return 1.0 / g.r1(); }

double total_curvature(const DiskInDisk& g) {
  static const GaussRule rule = gauss_legendre(8);
  return integrate([&](double s) { return curvature(s, g); }, 0.0, g.interface_length(), 4, rule);
}

BoundaryCoords::BoundaryCoords(const DiskInDisk& g, double t0) : geometry_(g), t0_(t0) {
  if (!(t0 > 0.0) || !(t0 < g.r1())) {
    throw InvalidArgument("tube half-width must lie in (0, r1)");
  }
}

void BoundaryCoords::check(double t) const {
  if (!(std::abs(t) < t0_)) {
    throw OutOfTube("|t| = " + std::to_string(std::abs(t)) + " outside the tube");
  }
}

Point BoundaryCoords::map(double s, double t) const {
  check(t);
  const double r1 = geometry_.r1();
  const Point normal(std::cos(s / r1), std::sin(s / r1));
  return r1 * normal - t * normal;
}

double BoundaryCoords::jacobian(double s, double t) const {
  check(t);
  return 1.0 - t * curvature(s, geometry_);
}

std::vector<Eigen::Index> tube_mask(const Eigen::Matrix<double, Eigen::Dynamic, 2>& points,
                                    double threshold, const DiskInDisk& g) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    if (std::abs(signed_distance(points.row(i).transpose(), g)) < threshold) out.push_back(i);
  }
  return out;
}

std::vector<Eigen::Index> tube_mask(const Eigen::VectorXd& distances, double threshold) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < distances.size(); ++i) {
    if (std::abs(distances[i]) < threshold) out.push_back(i);
  }
  return out;
}

}  // namespace gljunction
