#include "gljunction/energy.hpp"

#include <string>
#include <vector>

#include "gljunction/error.hpp"

namespace gljunction {

namespace {

void require_size(const Eigen::VectorXd& u, Eigen::Index n, const char* what) {
  if (u.size() != n) {
    throw GridMismatch(std::string(what) + ": field has " + std::to_string(u.size()) +
                       " values, problem has " + std::to_string(n) + " nodes");
  }
}

}  // namespace

ChainEnergy::ChainEnergy(Eigen::VectorXd conductance, Eigen::VectorXd inner_weight,
                         Eigen::VectorXd outer_weight, Potential potential)
    : conductance_(std::move(conductance)),
      inner_weight_(std::move(inner_weight)),
      outer_weight_(std::move(outer_weight)),
      mass_(inner_weight_ + outer_weight_),
      potential_(potential) {
  if (inner_weight_.size() < 2 || outer_weight_.size() != inner_weight_.size() ||
      conductance_.size() != inner_weight_.size() - 1) {
    throw InvalidArgument("chain energy: inconsistent array sizes");
  }
}

void ChainEnergy::check(const Eigen::VectorXd& u) const { require_size(u, size(), "chain energy"); }

double ChainEnergy::energy(const Eigen::VectorXd& u) const {
  check(u);
  const Eigen::Index n = size();
  const Eigen::ArrayXd jumps = u.tail(n - 1).array() - u.head(n - 1).array();
  double e = (conductance_.array() * jumps.square()).sum();
  for (Eigen::Index i = 0; i < n; ++i) {
    e += inner_weight_[i] * potential_.inner(u[i]) + outer_weight_[i] * potential_.outer(u[i]);
  }
  return e;
}

Eigen::VectorXd ChainEnergy::diffusion_gradient(const Eigen::VectorXd& u) const {
  check(u);
  const Eigen::Index n = size();
  const Eigen::VectorXd flux =
      2.0 * conductance_.cwiseProduct(u.tail(n - 1) - u.head(n - 1));
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  g.head(n - 1) -= flux;
  g.tail(n - 1) += flux;
  return g;
}

Eigen::VectorXd ChainEnergy::gradient(const Eigen::VectorXd& u) const {
  Eigen::VectorXd g = diffusion_gradient(u);
  for (Eigen::Index i = 0; i < size(); ++i) {
    g[i] += inner_weight_[i] * potential_.inner_d1(u[i]) +
            outer_weight_[i] * potential_.outer_d1(u[i]);
  }
  return g;
}

Tridiagonal ChainEnergy::hessian(const Eigen::VectorXd& u) const {
  check(u);
  const Eigen::Index n = size();
  Tridiagonal h;
  h.off = -2.0 * conductance_;
  h.diag = Eigen::VectorXd::Zero(n);
  h.diag.head(n - 1) += 2.0 * conductance_;
  h.diag.tail(n - 1) += 2.0 * conductance_;
  for (Eigen::Index i = 0; i < n; ++i) {
    h.diag[i] += inner_weight_[i] * potential_.inner_d2(u[i]) +
                 outer_weight_[i] * potential_.outer_d2(u[i]);
  }
  return h;
}

Eigen::VectorXd ChainEnergy::hessian_apply(const Eigen::VectorXd& u,
                                           const Eigen::VectorXd& v) const {
  check(v);
  return hessian(u).apply(v);
}

Tridiagonal ChainEnergy::quadratic_form() const {
  const Eigen::Index n = size();
  Tridiagonal k;
  k.off = -conductance_;
  k.diag = Eigen::VectorXd::Zero(n);
  k.diag.head(n - 1) += conductance_;
  k.diag.tail(n - 1) += conductance_;
  k.diag += -2.0 * potential_.well * inner_weight_ + potential_.normal * outer_weight_;
  return k;
}

GraphEnergy::GraphEnergy(Eigen::VectorXi from, Eigen::VectorXi to, Eigen::VectorXd conductance,
                         Eigen::VectorXd inner_weight, Eigen::VectorXd outer_weight,
                         Potential potential)
    : from_(std::move(from)),
      to_(std::move(to)),
      conductance_(std::move(conductance)),
      inner_weight_(std::move(inner_weight)),
      outer_weight_(std::move(outer_weight)),
      mass_(inner_weight_ + outer_weight_),
      potential_(potential) {
  if (from_.size() != to_.size() || from_.size() != conductance_.size() ||
      outer_weight_.size() != inner_weight_.size()) {
    throw InvalidArgument("graph energy: inconsistent array sizes");
  }
}

void GraphEnergy::check(const Eigen::VectorXd& u) const { require_size(u, size(), "graph energy"); }

double GraphEnergy::energy(const Eigen::VectorXd& u) const {
  check(u);
  double e = 0.0;
  for (Eigen::Index k = 0; k < edges(); ++k) {
    const double jump = u[to_[k]] - u[from_[k]];
    e += conductance_[k] * jump * jump;
  }
  for (Eigen::Index i = 0; i < size(); ++i) {
    e += inner_weight_[i] * potential_.inner(u[i]) + outer_weight_[i] * potential_.outer(u[i]);
  }
  return e;
}

Eigen::VectorXd GraphEnergy::gradient(const Eigen::VectorXd& u) const {
  check(u);
  Eigen::VectorXd g(size());
  for (Eigen::Index i = 0; i < size(); ++i) {
    g[i] = inner_weight_[i] * potential_.inner_d1(u[i]) +
           outer_weight_[i] * potential_.outer_d1(u[i]);
  }
  for (Eigen::Index k = 0; k < edges(); ++k) {
    const double flux = 2.0 * conductance_[k] * (u[to_[k]] - u[from_[k]]);
    g[from_[k]] -= flux;
    g[to_[k]] += flux;
  }
  return g;
}

SparseMatrix GraphEnergy::assemble(const Eigen::VectorXd& diagonal, double edge_scale) const {
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(size() + 4 * edges()));
  for (Eigen::Index i = 0; i < size(); ++i) entries.emplace_back(i, i, diagonal[i]);
  for (Eigen::Index k = 0; k < edges(); ++k) {
    const double c = edge_scale * conductance_[k];
    const int i = from_[k];
    const int j = to_[k];
    entries.emplace_back(i, i, c);
    entries.emplace_back(j, j, c);
    entries.emplace_back(i, j, -c);
    entries.emplace_back(j, i, -c);
  }
  SparseMatrix m(size(), size());
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

SparseMatrix GraphEnergy::hessian(const Eigen::VectorXd& u) const {
  check(u);
  Eigen::VectorXd diagonal(size());
  for (Eigen::Index i = 0; i < size(); ++i) {
    diagonal[i] = inner_weight_[i] * potential_.inner_d2(u[i]) +
                  outer_weight_[i] * potential_.outer_d2(u[i]);
  }
  return assemble(diagonal, 2.0);
}

Eigen::VectorXd GraphEnergy::hessian_apply(const Eigen::VectorXd& u,
                                           const Eigen::VectorXd& v) const {
  check(u);
  check(v);
  Eigen::VectorXd y(size());
  for (Eigen::Index i = 0; i < size(); ++i) {
    y[i] = (inner_weight_[i] * potential_.inner_d2(u[i]) +
            outer_weight_[i] * potential_.outer_d2(u[i])) *
           v[i];
  }
  for (Eigen::Index k = 0; k < edges(); ++k) {
    const double flux = 2.0 * conductance_[k] * (v[to_[k]] - v[from_[k]]);
    y[from_[k]] -= flux;
    y[to_[k]] += flux;
  }
  return y;
}

SparseMatrix GraphEnergy::quadratic_form() const {
  return assemble(-2.0 * potential_.well * inner_weight_ + potential_.normal * outer_weight_, 1.0);
}

}  // namespace gljunction
