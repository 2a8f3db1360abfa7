#include "gljunction/params.hpp"

#include <cmath>
#include <string>

#include "gljunction/error.hpp"
#include "gljunction/profile.hpp"

namespace gljunction {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidArgument(std::string(name) + " must be > 0");
  }
}

}  // namespace

Params::Params(double a, double m, double eps) : a_(a), m_(m), eps_(eps) {
  require_positive(a, "a");
  require_positive(m, "m");
  require_positive(eps, "eps");
}

double c1_inner_closed(double beta) {
  const double bp1 = beta + 1.0;
  return 4.0 * std::sqrt(2.0) * (3.0 * beta + 1.0) / (3.0 * bp1 * bp1 * bp1);
}

double c2_inner_closed(double beta) {
  const double bp1 = beta + 1.0;
  return 4.0 / 3.0 * (std::log1p(1.0 / beta) - beta / (bp1 * bp1));
}

double beta_from_ell(double ell) { return (1.0 + std::sqrt(1.0 + ell * ell)) / ell; }

ProfileConstants derive_constants(const Params& p) {
  const double a = p.a();
  const double m = p.m();

  ProfileConstants c;
  c.ell = std::sqrt(a / (2.0 * m));
  c.beta = (std::sqrt(2.0 * m) + std::sqrt(a + 2.0 * m)) / std::sqrt(a);
  c.A = (c.beta - 1.0) / (c.beta + 1.0);
  c.gamma = std::sqrt(a / m);
  c.b = 1.0 / c.gamma;

  c.c1_closed.inner = c1_inner_closed(c.beta);
  c.c1_closed.outer = 0.5 * c.gamma * (1.0 + 1.0 / m) * c.A * c.A;
  c.c2_closed.inner = c2_inner_closed(c.beta);
  c.c2_closed.outer = 0.25 * c.A * c.A * (1.0 + 1.0 / m);
  return c;
}

void fill_quadrature(ProfileConstants& constants, const Params& p) {
  constants.c1_quad = quadrature_c1(p);
  constants.c2_quad = quadrature_c2(p);
}

}  // namespace gljunction
