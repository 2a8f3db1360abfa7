#pragma once

// Reference values computed independently of the library: series and
// root-finding for Bessel functions, and constants evaluated with 30-digit
// arbitrary precision quadrature.

#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Core>

namespace oracle {

// J0 by its power series; accurate to ~1e-15 for x < 10.
inline double bessel_j0(double x) {
  double term = 1.0;
  double sum = 1.0;
  const double q = x * x / 4.0;
  for (int k = 1; k < 80; ++k) {
    term *= -q / (k * static_cast<double>(k));
    sum += term;
  }
  return sum;
}

// Y0 by its power series with harmonic numbers.
inline double bessel_y0(double x) {
  const double q = x * x / 4.0;
  double term = 1.0;
  double harmonic = 0.0;
  double tail = 0.0;
  for (int k = 1; k < 80; ++k) {
    term *= q / (k * static_cast<double>(k));
    harmonic += 1.0 / k;
    tail += ((k % 2) ? 1.0 : -1.0) * harmonic * term;
  }
  const double two_pi = 2.0 / std::numbers::pi;
  return two_pi * (std::log(x / 2.0) + std::numbers::egamma) * bessel_j0(x) + two_pi * tail;
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// First zero of J0, ~2.404825557695773.
inline double j0_first_zero() { return bisect(bessel_j0, 2.0, 3.0); }

// Lowest Dirichlet eigenvalue of the disk of radius r.
inline double disk_dirichlet(double r) {
  const double z = j0_first_zero();
  return z * z / (r * r);
}

// Lowest Dirichlet eigenvalue of the annulus r1 < |x| < r2: the first root
// k of J0(k r1) Y0(k r2) - J0(k r2) Y0(k r1), squared.
inline double annulus_dirichlet(double r1, double r2) {
  auto cross = [&](double k) {
    return bessel_j0(k * r1) * bessel_y0(k * r2) - bessel_j0(k * r2) * bessel_y0(k * r1);
  };
  // the first root lies just above pi / (r2 - r1) minus a curvature correction
  const double guess = std::numbers::pi / (r2 - r1);
  const double k = bisect(cross, 0.5 * guess, 1.2 * guess);
  return k * k;
}

// t > 0 and t < 0 parts of the c1 and c2 integrals, 30-digit quadrature.
struct FrozenConstants {
  double a, m;
  double c1_inner, c2_inner;
};

inline constexpr FrozenConstants kFrozen[] = {
    {1.0, 1.0, 0.27614237491539669920, 0.12397232049153255185},
    {1.0, 4.0, 0.109475708248730033, 0.0444629117604999185},
    {0.25, 4.0, 0.0348044613938297211, 0.0132524049829697716},
    {4.0, 0.25, 0.702549246108248163, 0.389545746160380299},
};

inline constexpr double kBetaUnit = 3.14626436994197234;  // a = m = 1
inline constexpr double kAUnit = 0.517638090205041525;
inline constexpr double kC1OuterUnit = 0.267949192431122706;
inline constexpr double kC2OuterUnit = -0.133974596215561353;

// Directional derivative of `f` along `v`, fourth-order central differences.
inline double directional_fd(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& u, const Eigen::VectorXd& v, double step) {
  return (-f(u + 2.0 * step * v) + 8.0 * f(u + step * v) - 8.0 * f(u - step * v) +
          f(u - 2.0 * step * v)) /
         (12.0 * step);
}

}  // namespace oracle
