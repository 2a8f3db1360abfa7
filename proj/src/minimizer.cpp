#include "gljunction/minimizer.hpp"

namespace gljunction {

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::newton: return "newton";
    case StepKind::shifted_newton: return "shifted_newton";
    case StepKind::gradient: return "gradient";
    case StepKind::saddle_escape: return "saddle_escape";
    case StepKind::polish: return "polish";
  }
  return "unknown";
}

namespace {

constexpr int kModeIterations = 500;
constexpr double kModeTolerance = 1e-6;

}  // namespace

std::optional<Eigen::VectorXd> ChainBackend::newton_direction(const Eigen::VectorXd& u,
                                                              const Eigen::VectorXd& g,
                                                              double shift) const {
  Tridiagonal h = energy_.hessian(u);
  if (shift != 0.0) h.diag += shift * energy_.mass();
  const auto ldlt = TridiagonalLdlt::factor(h);
  if (!ldlt) return std::nullopt;
  return ldlt->solve(-g);
}

CurvatureMode ChainBackend::lowest_mode(const Eigen::VectorXd& u) const {
  const Tridiagonal h = energy_.hessian(u);
  Tridiagonal shifted = h;
  shifted.diag += energy_.potential().certified_shift() * energy_.mass();
  const auto ldlt = TridiagonalLdlt::factor(shifted);
  if (!ldlt) return {0.0, Eigen::VectorXd::Zero(u.size())};
  const ModeResult mode = inverse_iteration([&](const Eigen::VectorXd& y) { return ldlt->solve(y); },
                                            [&](const Eigen::VectorXd& x) { return h.apply(x); },
                                            energy_.mass(), Eigen::VectorXd::Ones(u.size()),
                                            kModeTolerance, kModeIterations);
  return {mode.value, mode.vector};
}

std::optional<Eigen::VectorXd> GraphBackend::newton_direction(const Eigen::VectorXd& u,
                                                              const Eigen::VectorXd& g,
                                                              double shift) const {
  SparseMatrix h = energy_.hessian(u);
  if (shift != 0.0) {
    for (Eigen::Index i = 0; i < h.rows(); ++i) h.coeffRef(i, i) += shift * energy_.mass()[i];
  }
  CgResult cg = conjugate_gradient(h, -g, cg_tol_, cg_max_);
  if (cg.negative_curvature) return std::nullopt;
  return std::move(cg.x);
}

CurvatureMode GraphBackend::lowest_mode(const Eigen::VectorXd& u) const {
  const SparseMatrix h = energy_.hessian(u);
  SparseMatrix shifted = h;
  const double sigma = energy_.potential().certified_shift();
  for (Eigen::Index i = 0; i < h.rows(); ++i) shifted.coeffRef(i, i) += sigma * energy_.mass()[i];
  const ModeResult mode = inverse_iteration(
      [&](const Eigen::VectorXd& y) { return conjugate_gradient(shifted, y, cg_tol_, cg_max_).x; },
      [&](const Eigen::VectorXd& x) { return Eigen::VectorXd(h * x); }, energy_.mass(),
      Eigen::VectorXd::Ones(u.size()), kModeTolerance, kModeIterations);
  return {mode.value, mode.vector};
}

}  // namespace gljunction
