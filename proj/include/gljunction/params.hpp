#pragma once

#include <optional>

namespace gljunction {

/// Physical parameters of the junction model.
///
/// `a` is the strength of the normal-side potential, `m` the ratio of
/// conductivities and `eps` the Ginzburg-Landau length. All three must be
/// strictly positive; construction throws InvalidArgument otherwise.
class Params {
 public:
  Params(double a, double m, double eps = 1.0);

  double a() const noexcept { return a_; }
  double m() const noexcept { return m_; }
  double eps() const noexcept { return eps_; }

  /// Same (a, m) with a different eps.
  Params with_eps(double eps) const { return Params(a_, m_, eps); }

 private:
  double a_;
  double m_;
  double eps_;
};

/// The c1/c2 integrals split at the interface: `inner` is the t > 0
/// (superconducting) part and `outer` the t < 0 (normal) part.
struct SplitConstant {
  double inner = 0.0;
  double outer = 0.0;

  double total() const noexcept { return inner + outer; }
};

/// Scalars describing the one-dimensional junction profile.
struct ProfileConstants {
  double ell = 0.0;    // sqrt(a / 2m)
  double beta = 0.0;   // > 1
  double A = 0.0;      // profile value at the interface, (beta - 1)/(beta + 1)
  double gamma = 0.0;  // de Gennes coefficient sqrt(a/m)
  double b = 0.0;      // extrapolation length 1/gamma

  // Closed-form expressions for c1, c2.
  SplitConstant c1_closed;
  SplitConstant c2_closed;

  // Gauss-Legendre values of the defining integrals; unset until
  // fill_quadrature() runs. These are the authoritative values.
  std::optional<SplitConstant> c1_quad;
  std::optional<SplitConstant> c2_quad;
};

ProfileConstants derive_constants(const Params& p);

/// Closed forms of the t > 0 parts of c1 and c2 as functions of
/// beta >= 1. At beta = 1 (the pure tanh layer) c1 is 2 sqrt2 / 3.
double c1_inner_closed(double beta);
double c2_inner_closed(double beta);

/// beta via the alternative route (1 + sqrt(1 + l^2)) / l.
double beta_from_ell(double ell);

/// Populates c1_quad and c2_quad.
void fill_quadrature(ProfileConstants& constants, const Params& p);

}  // namespace gljunction
