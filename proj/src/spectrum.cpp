#include "gljunction/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gljunction/error.hpp"
#include "gljunction/linalg.hpp"

namespace gljunction {

using std::numbers::pi;

namespace {

constexpr double kResidualTol = 1e-8;
constexpr int kDirichletIterations = 100000;

double shift_for(const Params& p) { return -1.0 / (p.eps() * p.eps()) - 1.0; }

void fill_bound(EigenReport& report, const Params& p) {
  const double inv_eps2 = 1.0 / (p.eps() * p.eps());
  report.minmax_bound = std::min(report.dirichlet_inner - inv_eps2,
                                 report.dirichlet_outer / p.m() + p.a() * inv_eps2);
  // discrete round-off allowance
  report.bound_satisfied =
      report.lambda1 <= report.minmax_bound + 1e-9 * std::max(1.0, std::abs(report.minmax_bound));
}

void require_converged(const ModeResult& mode, const char* what) {
  if (!mode.converged) {
    throw NonConvergence(std::string(what) + ": inverse iteration stalled at residual " +
                         std::to_string(mode.residual) + " after " +
                         std::to_string(mode.iterations) + " iterations");
  }
}

}  // namespace

EigenReport lambda1(const RadialProblem& problem, int max_iterations) {
  const ChainEnergy& model = problem.model();
  const Tridiagonal form = model.quadratic_form();
  const double sigma = shift_for(problem.params());
  Tridiagonal shifted = form;
  shifted.diag -= sigma * model.mass();
  const auto ldlt = TridiagonalLdlt::factor(shifted);
  if (!ldlt) throw NonConvergence("lambda1: shifted form is not positive definite");

  const ModeResult mode = inverse_iteration(
      [&](const Eigen::VectorXd& y) { return ldlt->solve(y); },
      [&](const Eigen::VectorXd& x) { return form.apply(x); }, model.mass(),
      Eigen::VectorXd::Ones(problem.size()), kResidualTol, max_iterations);
  require_converged(mode, "lambda1");

  EigenReport report;
  report.lambda1 = mode.value;
  report.eigenfunction = mode.vector;
  report.residual = mode.residual;
  report.iterations = mode.iterations;
  report.shift = sigma;
  const auto k = static_cast<int>(problem.interface_index());
  report.dirichlet_inner = dirichlet_lambda1(Disk{problem.geometry().r1()}, k);
  report.dirichlet_outer = dirichlet_lambda1(
      Annulus{problem.geometry().r1(), problem.geometry().r2()}, problem.intervals() - k);
  fill_bound(report, problem.params());
  return report;
}

EigenReport lambda1(const CartesianProblem& problem, int max_iterations) {
  const GraphEnergy& model = problem.model();
  const SparseMatrix form = model.quadratic_form();
  const double sigma = shift_for(problem.params());
  SparseMatrix shifted = form;
  for (Eigen::Index i = 0; i < shifted.rows(); ++i) shifted.coeffRef(i, i) -= sigma * model.mass()[i];

  const ModeResult mode = inverse_iteration(
      [&](const Eigen::VectorXd& y) { return conjugate_gradient(shifted, y, 1e-12, 100000).x; },
      [&](const Eigen::VectorXd& x) { return Eigen::VectorXd(form * x); }, model.mass(),
      Eigen::VectorXd::Ones(problem.size()), kResidualTol, max_iterations);
  require_converged(mode, "lambda1");

  EigenReport report;
  report.lambda1 = mode.value;
  report.eigenfunction = mode.vector;
  report.residual = mode.residual;
  report.iterations = mode.iterations;
  report.shift = sigma;
  const DiskInDisk& g = problem.geometry();
  const double h = problem.spacing();
  report.dirichlet_inner =
      dirichlet_lambda1(Disk{g.r1()}, static_cast<int>(std::ceil(g.r1() / h)));
  report.dirichlet_outer = dirichlet_lambda1(Annulus{g.r1(), g.r2()},
                                             static_cast<int>(std::ceil((g.r2() - g.r1()) / h)));
  fill_bound(report, problem.params());
  return report;
}

double rayleigh_quotient(const RadialProblem& problem, const Field& phi) {
  if (phi.size() != problem.size()) throw GridMismatch("rayleigh_quotient: field size");
  const ChainEnergy& model = problem.model();
  return phi.dot(model.quadratic_form().apply(phi)) / phi.dot(model.mass().cwiseProduct(phi));
}

double rayleigh_quotient(const CartesianProblem& problem, const Field& phi) {
  if (phi.size() != problem.size()) throw GridMismatch("rayleigh_quotient: field size");
  const GraphEnergy& model = problem.model();
  return phi.dot(model.quadratic_form() * phi) / phi.dot(model.mass().cwiseProduct(phi));
}

double dirichlet_lambda1(const DirichletDomain& domain, int intervals) {
  if (intervals < 2) throw InvalidArgument("dirichlet_lambda1 needs at least 2 intervals");
  double lo = 0.0;
  double hi = 0.0;
  bool pinned_origin = false;
  if (const auto* disk = std::get_if<Disk>(&domain)) {
    if (!(disk->radius > 0.0)) throw InvalidArgument("disk radius must be > 0");
    hi = disk->radius;
  } else {
    const auto& ring = std::get<Annulus>(domain);
    if (!(ring.inner > 0.0) || !(ring.outer > ring.inner)) {
      throw InvalidArgument("annulus needs 0 < inner < outer");
    }
    lo = ring.inner;
    hi = ring.outer;
    pinned_origin = true;
  }

  const double h = (hi - lo) / intervals;
  // unknowns: nodes 0..n-1 (disk) or 1..n-1 (annulus); the pinned ends are zero
  const int first = pinned_origin ? 1 : 0;
  const int count = intervals - first;
  Tridiagonal form;
  form.diag = Eigen::VectorXd::Zero(count);
  form.off = Eigen::VectorXd::Zero(std::max(count - 1, 0));
  Eigen::VectorXd mass(count);
  for (int e = 0; e < intervals; ++e) {
    const double k = 2.0 * pi * (lo + (e + 0.5) * h) / h;
    const int i = e - first;
    const int j = i + 1;
    if (i >= 0 && i < count) form.diag[i] += k;
    if (j >= 0 && j < count) form.diag[j] += k;
    if (i >= 0 && j < count) form.off[i] = -k;
  }
  for (int i = 0; i < count; ++i) mass[i] = 2.0 * pi * (lo + (i + first) * h) * h;

  Tridiagonal shifted = form;
  shifted.diag += mass;
  const auto ldlt = TridiagonalLdlt::factor(shifted);
  if (!ldlt) throw NonConvergence("dirichlet_lambda1: shifted form is not positive definite");
  const ModeResult mode = inverse_iteration(
      [&](const Eigen::VectorXd& y) { return ldlt->solve(y); },
      [&](const Eigen::VectorXd& x) { return form.apply(x); }, mass,
      Eigen::VectorXd::Ones(count), kResidualTol, kDirichletIterations);
  require_converged(mode, "dirichlet_lambda1");
  return mode.value;
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::trivial: return "trivial";
    case Regime::nontrivial: return "nontrivial";
    case Regime::indeterminate: return "indeterminate";
  }
  return "unknown";
}

Regime classify(double lambda) {
  if (std::abs(lambda) < 1e-10) return Regime::indeterminate;
  return lambda < 0.0 ? Regime::nontrivial : Regime::trivial;
}

Regime classify(const EigenReport& report) { return classify(report.lambda1); }

}  // namespace gljunction
