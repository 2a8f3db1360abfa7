#pragma once

#include <Eigen/Core>
#include <vector>

namespace gljunction {

using Point = Eigen::Vector2d;

/// Omega_1 = disk of radius r1 (superconductor), Omega = disk of radius r2,
/// Omega_2 = the annulus between them (normal material).
class DiskInDisk {
 public:
  DiskInDisk(double r1, double r2);

  double r1() const noexcept { return r1_; }
  double r2() const noexcept { return r2_; }

  double inner_area() const;     // |Omega_1|
  double outer_area() const;     // |Omega_2|
  double interface_length() const;  // |d Omega_1|

 private:
  double r1_;
  double r2_;
};

/// Signed distance to the interface: positive in Omega_1, negative outside.
double signed_distance(const Point& x, const DiskInDisk& g);

/// Scalar curvature of the interface at arclength s (1/r1 for a circle).
double curvature(double s, const DiskInDisk& g);

/// Integral of the curvature along the interface (2 pi for any circle),
/// evaluated by quadrature over the arclength.
double total_curvature(const DiskInDisk& g);

/// Tubular (s, t) coordinates around the interface, valid for |t| < t0.
///
/// The interface is parameterized by M(s) = r1 (cos(s/r1), sin(s/r1)) and
/// Phi(s, t) = M(s) - t nu(s) with nu the outward unit normal, so t > 0
/// points into Omega_1.
class BoundaryCoords {
 public:
  BoundaryCoords(const DiskInDisk& g, double t0);

  double t0() const noexcept { return t0_; }

  Point map(double s, double t) const;
  /// Area Jacobian 1 - t kappa(s).
  double jacobian(double s, double t) const;

 private:
  void check(double t) const;

  DiskInDisk geometry_;
  double t0_;
};

/// Indices of the points with |t(x)| < threshold.
std::vector<Eigen::Index> tube_mask(const Eigen::Matrix<double, Eigen::Dynamic, 2>& points,
                                    double threshold, const DiskInDisk& g);

/// Same selection from precomputed signed distances.
std::vector<Eigen::Index> tube_mask(const Eigen::VectorXd& distances, double threshold);

}  // namespace gljunction
