#include "gljunction/profile.hpp"

#include <algorithm>
#include <cmath>

#include "gljunction/error.hpp"
#include "gljunction/quadrature.hpp"

namespace gljunction {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Beyond this q = beta e^{sqrt2 t} the t > 0 branch equals 1 to machine
// precision and its derivatives vanish.
constexpr double kSaturation = 1e150;

}  // namespace

Profile1D::Profile1D(const Params& p)
    : params_(p), constants_(derive_constants(p)), outer_rate_(std::sqrt(p.a() * p.m())) {}

double Profile1D::value(double t) const {
  if (t < 0.0) return constants_.A * std::exp(outer_rate_ * t);
  const double q = constants_.beta * std::exp(kSqrt2 * t);
  if (q > kSaturation) return 1.0;
  return (q - 1.0) / (q + 1.0);
}

double Profile1D::derivative(double t, Side side) const {
  if (t < 0.0 || (t == 0.0 && side == Side::minus)) {
    return outer_rate_ * constants_.A * std::exp(outer_rate_ * t);
  }
  const double q = constants_.beta * std::exp(kSqrt2 * t);
  if (q > kSaturation) return 0.0;
  return 2.0 * kSqrt2 * q / ((q + 1.0) * (q + 1.0));
}

double Profile1D::second_derivative(double t, Side side) const {
  if (t < 0.0 || (t == 0.0 && side == Side::minus)) {
    return outer_rate_ * outer_rate_ * constants_.A * std::exp(outer_rate_ * t);
  }
  const double q = constants_.beta * std::exp(kSqrt2 * t);
  if (q > kSaturation) return 0.0;
  const double qp1 = q + 1.0;
  return 4.0 * q * (1.0 - q) / (qp1 * qp1 * qp1);
}

double eval_U(double t, const Params& p) { return Profile1D(p).value(t); }

double eval_U_prime(double t, const Params& p, Side side) {
  return Profile1D(p).derivative(t, side);
}

double ode_residual(const Params& p, std::span<const double> samples) {
  const Profile1D profile(p);
  const double am = p.a() * p.m();
  double worst = 0.0;
  for (double t : samples) {
    if (t == 0.0) throw InvalidArgument("ode_residual samples must exclude t = 0");
    const double u = profile.value(t);
    const double upp = profile.second_derivative(t);
    const double r = t > 0.0 ? -upp - (1.0 - u * u) * u : -upp + am * u;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double de_gennes_gap(const Params& p) {
  const Profile1D profile(p);
  return profile.derivative(0.0, Side::plus) / profile.value(0.0) - profile.constants().gamma;
}

double transmission_gap(const Params& p) {
  const Profile1D profile(p);
  return profile.derivative(0.0, Side::plus) - profile.derivative(0.0, Side::minus) / p.m();
}

namespace {

struct Truncation {
  double inner;  // integrate t in [0, inner]
  double outer;  // integrate t in [-outer, 0]
};

// Integrands decay like e^{-2 sqrt2 t} (inner) and e^{2 sqrt(am) t} (outer);
// both truncations leave tails below e^{-40}.
Truncation truncation(const Params& p) {
  return {20.0 / kSqrt2, 20.0 / std::sqrt(p.a() * p.m())};
}

template <typename Weight>
SplitConstant integrate_energy_density(const Params& p, Weight weight) {
  static const GaussRule rule = gauss_legendre(16);
  const Profile1D profile(p);
  const Truncation cut = truncation(p);
  const double inv_m = 1.0 / p.m();
  const double a = p.a();

  SplitConstant out;
  out.inner = integrate(
      [&](double t) {
        const double u = profile.value(t);
        const double du = profile.derivative(t);
        const double well = 1.0 - u * u;
        return (du * du + 0.5 * well * well) * weight(t);
      },
      0.0, cut.inner, 64, rule);
  out.outer = integrate(
      [&](double t) {
        const double u = profile.value(t);
        const double du = profile.derivative(t);
        return (inv_m * du * du + a * u * u) * weight(t);
      },
      -cut.outer, 0.0, 40, rule);
  return out;
}

}  // namespace

SplitConstant quadrature_c1(const Params& p) {
  return integrate_energy_density(p, [](double) { return 1.0; });
}

SplitConstant quadrature_c2(const Params& p) {
  return integrate_energy_density(p, [](double t) { return t; });
}

double limit_check(const Params& p, LimitSide side, double horizon) {
  if (!(horizon > 0.0)) throw InvalidArgument("limit_check horizon must be > 0");
  const Profile1D profile(p);
  constexpr int kSamples = 20000;
  double worst = 0.0;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = horizon * i / kSamples;
    const double u = profile.value(t);
    const double target = side == LimitSide::neumann ? 1.0 : std::tanh(t / kSqrt2);
    worst = std::max(worst, std::abs(u - target));
  }
  return worst;
}

}  // namespace gljunction
