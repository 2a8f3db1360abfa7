#pragma once

#include <Eigen/Core>
#include <span>

#include "gljunction/params.hpp"

namespace gljunction {

/// Which one-sided limit to take at the interface t = 0.
enum class Side { minus, plus };

/// Closed-form half-plane junction profile U(t).
///
/// For t >= 0, U(t) = (beta e^{sqrt2 t} - 1) / (beta e^{sqrt2 t} + 1); for
/// t < 0, U(t) = A e^{sqrt(am) t}. U is continuous, strictly increasing, and
/// its derivative jumps by the factor m across t = 0.
class Profile1D {
 public:
  explicit Profile1D(const Params& p);

  const Params& params() const noexcept { return params_; }
  const ProfileConstants& constants() const noexcept { return constants_; }

  double value(double t) const;
  /// `side` selects the one-sided derivative when t == 0.
  double derivative(double t, Side side = Side::plus) const;
  double second_derivative(double t, Side side = Side::plus) const;

  /// Element-wise value over an Eigen array expression.
  template <typename Derived>
  Eigen::ArrayXd values(const Eigen::ArrayBase<Derived>& t) const {
    return t.derived().unaryExpr([this](double s) { return value(s); }).eval();
  }

 private:
  Params params_;
  ProfileConstants constants_;
  double outer_rate_;  // sqrt(am)
};

double eval_U(double t, const Params& p);
double eval_U_prime(double t, const Params& p, Side side = Side::plus);

/// max |-U'' - (1 - U^2) U| (t > 0) and |-U'' + am U| (t < 0) over the
/// samples. Throws InvalidArgument if a sample is exactly 0.
double ode_residual(const Params& p, std::span<const double> samples);

/// U'(0+)/U(0) - sqrt(a/m).
double de_gennes_gap(const Params& p);

/// U'(0+) - U'(0-)/m.
double transmission_gap(const Params& p);

/// Defining integrals of c1 and c2 by composite Gauss-Legendre.
SplitConstant quadrature_c1(const Params& p);
SplitConstant quadrature_c2(const Params& p);

enum class LimitSide { neumann, dirichlet };

/// sup over [0, horizon] of |U - 1| (neumann) or |U - tanh(t/sqrt2)|
/// (dirichlet).
double limit_check(const Params& p, LimitSide side, double horizon = 20.0);

}  // namespace gljunction
