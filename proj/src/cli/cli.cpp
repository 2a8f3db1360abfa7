#include "gljunction/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ctime>
#include <exception>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "gljunction/asymptotics.hpp"
#include "gljunction/profile.hpp"
#include "gljunction/solver.hpp"
#include "gljunction/spectrum.hpp"
#include "gljunction/variational1d.hpp"
#include "io.hpp"

namespace gljunction::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Common {
  double a = 1.0;
  double m = 1.0;
  std::string out = ".";
  bool no_timestamp = false;
  std::string config;
};

struct Domain {
  double eps = 0.1;
  double r1 = 1.0;
  double r2 = 2.0;
  int n = 0;  // radial intervals; 0 picks from nodes_per_eps
  double nodes_per_eps = 20.0;
  std::string h = "1/64";
  std::string mode = "radial";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--a", c.a, "outer potential coefficient a > 0")->capture_default_str();
  sub->add_option("--m", c.m, "mass ratio m > 0")->capture_default_str();
  sub->add_option("--out", c.out, "output directory")->capture_default_str();
  sub->add_flag("--no-timestamp", c.no_timestamp, "omit the generated_at field");
  sub->add_option("--config", c.config, "key=value file; flags given on the line win");
}

void add_domain(CLI::App* sub, Domain& d, bool with_eps) {
  if (with_eps) sub->add_option("--eps", d.eps, "eps > 0")->capture_default_str();
  sub->add_option("--r1", d.r1, "radius of Omega_1")->capture_default_str();
  sub->add_option("--r2", d.r2, "outer radius")->capture_default_str();
  sub->add_option("--n", d.n, "radial intervals on [0, r2]");
  sub->add_option("--nodes-per-eps", d.nodes_per_eps, "radial resolution when --n is absent")
      ->capture_default_str();
  sub->add_option("--h", d.h, "Cartesian spacing, e.g. 0.01 or 1/128")->capture_default_str();
  sub->add_option("--mode", d.mode, "radial or cart")
      ->check(CLI::IsMember({"radial", "cart"}))
      ->capture_default_str();
}

double parse_spacing(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  double value = 0.0;
  try {
    if (slash == std::string::npos) {
      value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string num = text.substr(0, slash);
      const std::string den = text.substr(slash + 1);
      std::size_t u1 = 0;
      std::size_t u2 = 0;
      value = std::stod(num, &u1) / std::stod(den, &u2);
      if (u1 != num.size() || u2 != den.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw InvalidArgument("cannot parse spacing '" + text + "'");
  }
  if (!(value > 0.0) || !std::isfinite(value)) throw InvalidArgument("h must be > 0");
  return value;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json header(const std::string& command, const Common& c) {
  Json doc;
  doc["command"] = command;
  if (!c.no_timestamp) doc["generated_at"] = utc_now();
  doc["a"] = c.a;
  doc["m"] = c.m;
  return doc;
}

// Non-finite doubles have no JSON form; they are written as null.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

RadialProblem make_radial(const Params& p, const Domain& d) {
  const DiskInDisk g(d.r1, d.r2);
  if (!(d.nodes_per_eps > 0.0)) throw InvalidArgument("nodes-per-eps must be > 0");
  const int n = d.n > 0 ? d.n : radial_intervals_for(g, p.eps() / d.nodes_per_eps);
  return RadialProblem(g, p, n);
}

void warn_resolution(double spacing, double eps, std::ostream& err) {
  if (!resolution_ok(spacing, eps)) {
    err << "warning: h = " << format_double(spacing) << " gives fewer than 12 nodes per eps\n";
  }
}

void put_report(Json& doc, const SolveReport& r) {
  doc["mode"] = r.mode;
  doc["status"] = r.status;
  doc["converged"] = r.converged;
  doc["iterations"] = r.iterations;
  doc["tolerance"] = r.tolerance;
  doc["grad_norm"] = r.grad_norm;
  doc["energy"] = r.energy;
  doc["normal_state_energy"] = r.normal_state_energy;
  doc["below_normal_state"] = r.energy < r.normal_state_energy;
  doc["min_u"] = r.min_u;
  doc["max_u"] = r.max_u;
  doc["sup_norm"] = r.sup_norm;
  doc["strictly_between"] = r.strictly_between;
  doc["k0"] = r.k0;
  doc["interior_inf"] = r.interior_inf ? Json(*r.interior_inf) : Json(nullptr);
  doc["init"] = r.init_kind;
  doc["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  doc["abs_restarts"] = r.abs_restarts;
  doc["resolution_ok"] = r.resolution_ok;
}

void write_trace(const fs::path& path, const std::vector<TraceEntry>& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << "iteration,energy,grad_norm,step_length,kind\n";
  for (const TraceEntry& e : trace) {
    out << e.iteration << ',' << format_double(e.energy) << ',' << format_double(e.grad_norm)
        << ',' << format_double(e.step_length) << ',' << to_string(e.kind) << '\n';
  }
}

InitialGuess make_init(const std::string& kind, double value, std::uint64_t seed) {
  if (kind == "ramp") return RampInit{};
  if (kind == "constant") return ConstantInit{value};
  return RandomInit{seed};
}

// ---- profile ----

struct ProfileArgs {
  Common common;
  std::string limit;
  double t_max = 10.0;
  int samples = 401;
  bool variational = false;
  double h1d = 1e-2;
};

int cmd_profile(const ProfileArgs& args, std::ostream& out) {
  const Common& c = args.common;
  const Params p(c.a, c.m);
  if (!(args.t_max > 0.0) || args.samples < 2) throw InvalidArgument("need t-max > 0, samples >= 2");
  ProfileConstants k = derive_constants(p);
  fill_quadrature(k, p);

  Json doc = header("profile", c);
  doc["ell"] = k.ell;
  doc["beta"] = k.beta;
  doc["A"] = k.A;
  doc["gamma"] = k.gamma;
  doc["b"] = k.b;
  auto put_split = [&](const std::string& name, const SplitConstant& closed,
                       const SplitConstant& quad) {
    doc[name + "_closed_inner"] = closed.inner;
    doc[name + "_closed_outer"] = closed.outer;
    doc[name + "_closed"] = closed.total();
    doc[name + "_quad_inner"] = quad.inner;
    doc[name + "_quad_outer"] = quad.outer;
    doc[name + "_quad"] = quad.total();
    doc[name + "_inner_diff"] = quad.inner - closed.inner;
    doc[name + "_outer_diff"] = quad.outer - closed.outer;
  };
  put_split("c1", k.c1_closed, *k.c1_quad);
  put_split("c2", k.c2_closed, *k.c2_quad);
  doc["de_gennes_gap"] = de_gennes_gap(p);
  doc["transmission_gap"] = transmission_gap(p);

  const Profile1D profile(p);
  std::vector<double> t;
  const int n = args.samples;
  for (int i = 0; i < n; ++i) t.push_back(-args.t_max + 2.0 * args.t_max * i / (n - 1));
  t.erase(std::remove(t.begin(), t.end(), 0.0), t.end());
  std::vector<double> u, du, res;
  double res_minus = 0.0, res_plus = 0.0;
  for (double s : t) {
    const double r = ode_residual(p, std::span<const double>(&s, 1));
    double& worst = s < 0 ? res_minus : res_plus;
    worst = std::max(worst, r);
    u.push_back(profile.value(s));
    du.push_back(profile.derivative(s));
    res.push_back(r);
  }
  doc["ode_residual_minus"] = res_minus;
  doc["ode_residual_plus"] = res_plus;

  if (!args.limit.empty()) {
    const LimitSide side = args.limit == "neumann" ? LimitSide::neumann : LimitSide::dirichlet;
    doc["limit"] = args.limit;
    doc["limit_sup"] = limit_check(p, side);
  }

  const fs::path dir(c.out);
  if (args.variational) {
    const Grid1D grid(default_truncation(p), args.h1d);
    const Eigen::VectorXd exact = sample_profile(grid, p);
    const DiscreteProfile d = minimize_F(grid, p, Eigen::VectorXd::Constant(grid.size(), 0.5));
    doc["variational_h"] = args.h1d;
    doc["variational_energy"] = d.energy;
    doc["variational_iterations"] = d.iterations;
    doc["variational_sup_error"] = (d.values - exact).lpNorm<Eigen::Infinity>();
    write_csv(dir / "variational.csv",
              {{"t", to_std(grid.nodes())}, {"u", to_std(d.values)}, {"U", to_std(exact)}});
    write_trace(dir / "variational_trace.csv", d.trace);
  }

  write_json(dir / "constants.json", doc);
  write_csv(dir / "profile.csv", {{"t", t}, {"U", u}, {"U_prime", du}, {"residual", res}});
  out << "gamma " << format_double(k.gamma) << "  c1 " << format_double(k.c1_quad->total())
      << "  c2 " << format_double(k.c2_quad->total()) << '\n';
  return ok;
}

// ---- solve ----

struct SolveArgs {
  Common common;
  Domain domain;
  std::string init = "ramp";
  double init_value = 0.5;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  int max_iterations = 500;
  double k0 = 5.0;
  double c0 = 0.5;
  bool eigen = false;
};

template <typename Problem>
void put_layer(Json& doc, const Problem& problem, const Field& u, const fs::path& dir) {
  const LayerError le = layer_error(problem, u);
  doc["layer_error"] = le.sup_all;
  doc["layer_error_tube"] = le.sup_tube;
  const Profile1D profile(problem.params());
  const double eps = problem.params().eps();
  std::vector<std::size_t> order(static_cast<std::size_t>(u.size()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return problem.distances()[static_cast<Eigen::Index>(x)] <
           problem.distances()[static_cast<Eigen::Index>(y)];
  });
  std::vector<double> t, err;
  for (std::size_t i : order) {
    const auto j = static_cast<Eigen::Index>(i);
    t.push_back(problem.distances()[j] / eps);
    err.push_back(u[j] - profile.value(problem.distances()[j] / eps));
  }
  write_dat(dir / "layer.dat", "t/eps  u - U(t/eps)", t, err);
}

void put_eigen(Json& doc, const EigenReport& e) {
  doc["lambda1"] = e.lambda1;
  doc["regime"] = to_string(classify(e));
  doc["minmax_bound"] = e.minmax_bound;
  doc["bound_satisfied"] = e.bound_satisfied;
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const Common& c = args.common;
  const Domain& d = args.domain;
  const Params p(c.a, c.m, d.eps);
  const DiskInDisk g(d.r1, d.r2);
  const InitialGuess init = make_init(args.init, args.init_value, args.seed);
  SolveOptions opts;
  opts.grad_tol = args.tol;
  opts.max_iterations = args.max_iterations;
  opts.k0 = args.k0;
  const fs::path dir(c.out);
  Json doc = header("solve", c);
  doc["eps"] = d.eps;
  doc["r1"] = d.r1;
  doc["r2"] = d.r2;

  auto finish = [&](const auto& problem, const SolveResult& result, int code) {
    doc["spacing"] = problem.spacing();
    doc["nodes"] = problem.size();
    put_report(doc, result.report);
    doc["c0"] = args.c0;
    doc["interior_bound_ok"] =
        result.report.interior_inf ? Json(*result.report.interior_inf >= args.c0) : Json(nullptr);
    put_layer(doc, problem, result.u, dir);
    write_trace(dir / "trace.csv", result.trace);
    write_json(dir / "report.json", doc);
    out << result.report.status << "  energy " << format_double(result.report.energy)
        << "  sup " << format_double(result.report.sup_norm) << '\n';
    return code;
  };
  auto attempt = [&](const auto& problem) {
    try {
      return std::pair<SolveResult, int>(solve(problem, init, opts), ok);
    } catch (const SolveNonConvergence& e) {
      err << "error: " << e.what() << '\n';
      return std::pair<SolveResult, int>(e.result(), numerical_failure);
    } catch (const SolveDiverged& e) {
      err << "error: " << e.what() << '\n';
      return std::pair<SolveResult, int>(e.result(), numerical_failure);
    }
  };

  if (d.mode == "radial") {
    const RadialProblem problem = make_radial(p, d);
    warn_resolution(problem.spacing(), d.eps, err);
    put_eigen(doc, lambda1(problem));
    auto [result, code] = attempt(problem);
    write_csv(dir / "solution.csv", {{"r", to_std(problem.radii())},
                                     {"t", to_std(problem.distances())},
                                     {"u", to_std(result.u)}});
    return finish(problem, result, code);
  }

  const CartesianProblem problem(g, p, parse_spacing(d.h));
  warn_resolution(problem.spacing(), d.eps, err);
  if (args.eigen) put_eigen(doc, lambda1(problem));
  auto [result, code] = attempt(problem);
  write_csv(dir / "solution.csv", {{"x", to_std(problem.points().col(0))},
                                   {"y", to_std(problem.points().col(1))},
                                   {"t", to_std(problem.distances())},
                                   {"u", to_std(result.u)}});
  return finish(problem, result, code);
}

// ---- eigen ----

struct EigenArgs {
  Common common;
  Domain domain;
};

int cmd_eigen(const EigenArgs& args, std::ostream& out, std::ostream& err) {
  const Common& c = args.common;
  const Domain& d = args.domain;
  const Params p(c.a, c.m, d.eps);
  Json doc = header("eigen", c);
  doc["eps"] = d.eps;
  doc["r1"] = d.r1;
  doc["r2"] = d.r2;
  doc["mode"] = d.mode;

  auto emit = [&](const auto& problem, const EigenReport& e, std::vector<Column> coords) {
    doc["spacing"] = problem.spacing();
    doc["nodes"] = problem.size();
    put_eigen(doc, e);
    doc["residual"] = e.residual;
    doc["iterations"] = e.iterations;
    doc["shift"] = e.shift;
    doc["dirichlet_inner"] = e.dirichlet_inner;
    doc["dirichlet_outer"] = e.dirichlet_outer;
    doc["rayleigh_quotient"] = rayleigh_quotient(problem, e.eigenfunction);
    coords.push_back({"phi", to_std(e.eigenfunction)});
    write_csv(fs::path(c.out) / "eigenfunction.csv", coords);
    write_json(fs::path(c.out) / "eigen.json", doc);
    out << "lambda1 " << format_double(e.lambda1) << "  " << to_string(classify(e))
        << "  bound " << (e.bound_satisfied ? "ok" : "violated") << '\n';
    return ok;
  };

  if (d.mode == "radial") {
    const RadialProblem problem = make_radial(p, d);
    warn_resolution(problem.spacing(), d.eps, err);
    return emit(problem, lambda1(problem), {{"r", to_std(problem.radii())}});
  }
  const CartesianProblem problem(DiskInDisk(d.r1, d.r2), p, parse_spacing(d.h));
  warn_resolution(problem.spacing(), d.eps, err);
  return emit(problem, lambda1(problem),
              {{"x", to_std(problem.points().col(0))}, {"y", to_std(problem.points().col(1))}});
}

// ---- sweep ----

struct SweepArgs {
  Common common;
  Domain domain;
  std::vector<double> eps;
  int jobs = 1;
};

struct SweepRow {
  double eps = 0.0;
  double spacing = kNaN;
  double energy = kNaN;
  double grad_norm = kNaN;
  double iterations = kNaN;
  double converged = 0.0;
  double layer_error = kNaN;
  double agmon_inner = kNaN;
  double agmon_outer = kNaN;
  double min_u = kNaN;
  double max_u = kNaN;
  double lambda1 = kNaN;
  std::string failure;
};

SweepRow sweep_one(const Params& base, const Domain& d, double eps) {
  SweepRow row;
  row.eps = eps;
  const Params p = base.with_eps(eps);
  const RadialProblem problem = make_radial(p, d);
  row.spacing = problem.spacing();
  row.lambda1 = lambda1(problem).lambda1;
  SolveResult result;
  try {
    result = solve(problem, RampInit{});
  } catch (const SolveNonConvergence& e) {
    result = e.result();
    row.failure = e.what();
  } catch (const SolveDiverged& e) {
    result = e.result();
    row.failure = e.what();
  }
  const SolveReport& r = result.report;
  row.energy = r.energy;
  row.grad_norm = r.grad_norm;
  row.iterations = r.iterations;
  row.converged = r.converged ? 1.0 : 0.0;
  row.min_u = r.min_u;
  row.max_u = r.max_u;
  row.layer_error = layer_error(problem, result.u).sup_all;
  try {
    const FitWindow w = default_agmon_window(p, problem.geometry());
    const AgmonRates rates = agmon_fit(problem, result.u, w, w);
    row.agmon_inner = rates.inner;
    row.agmon_outer = rates.outer;
  } catch (const Error&) {
    // the window is too narrow or the tails hit the floor: leave NaN
  }
  return row;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const Common& c = args.common;
  const Params base(c.a, c.m);
  if (args.eps.empty()) throw InvalidArgument("--eps needs at least one value");
  for (double e : args.eps) {
    if (!(e > 0.0)) throw InvalidArgument("eps must be > 0");
  }
  if (args.jobs < 1) throw InvalidArgument("jobs must be >= 1");
  if (args.domain.mode != "radial") throw InvalidArgument("sweep supports --mode radial only");

  std::vector<double> eps = args.eps;
  std::sort(eps.begin(), eps.end(), std::greater<>());
  std::vector<SweepRow> rows(eps.size());
  std::vector<std::exception_ptr> errors(eps.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < eps.size(); i = next++) {
      try {
        rows[i] = sweep_one(base, args.domain, eps[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(args.jobs), eps.size());
  for (std::size_t j = 0; j < count; ++j) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const SweepRow& r : rows) warn_resolution(r.spacing, r.eps, err);

  std::vector<Column> table{{"eps", {}},         {"h", {}},           {"energy", {}},
                            {"grad_norm", {}},   {"iterations", {}},  {"converged", {}},
                            {"layer_error", {}}, {"agmon_inner", {}}, {"agmon_outer", {}},
                            {"min_u", {}},       {"max_u", {}},       {"lambda1", {}}};
  int code = ok;
  for (const SweepRow& r : rows) {
    const double values[] = {r.eps,         r.spacing,     r.energy,      r.grad_norm,
                             r.iterations,  r.converged,   r.layer_error, r.agmon_inner,
                             r.agmon_outer, r.min_u,       r.max_u,       r.lambda1};
    for (std::size_t k = 0; k < table.size(); ++k) table[k].values.push_back(values[k]);
    if (!r.failure.empty()) {
      err << "error: eps " << format_double(r.eps) << ": " << r.failure << '\n';
      code = numerical_failure;
    }
    out << "eps " << format_double(r.eps) << "  energy " << format_double(r.energy) << '\n';
  }
  write_csv(fs::path(c.out) / "sweep.csv", table);
  return code;
}

// ---- asymptotics ----

struct AsymptoticsArgs {
  Common common;
  Domain domain;
  std::string table;
  double flag_fraction = 0.1;
};

int cmd_asymptotics(const AsymptoticsArgs& args, std::ostream& out) {
  const Common& c = args.common;
  const Params p(c.a, c.m);
  const DiskInDisk g(args.domain.r1, args.domain.r2);
  const std::vector<Column> table = read_csv(args.table);
  const Column& eps = column(table, "eps");
  const bool has_energy =
      std::any_of(table.begin(), table.end(), [](const Column& k) { return k.name == "energy"; });
  const Column& energy = column(table, has_energy ? "energy" : "G0");
  std::vector<EnergyRun> runs;
  for (std::size_t i = 0; i < eps.values.size(); ++i) runs.push_back({eps.values[i], energy.values[i]});

  const FitReport f = energy_expansion_fit(runs, p, g, args.flag_fraction);
  Json doc = header("asymptotics", c);
  doc["r1"] = args.domain.r1;
  doc["r2"] = args.domain.r2;
  doc["table"] = fs::path(args.table).filename().string();
  doc["runs"] = f.runs;
  doc["eps_min"] = f.eps_min;
  doc["eps_max"] = f.eps_max;
  doc["p"] = f.p;
  doc["q"] = f.q;
  doc["residual_rms"] = f.residual_rms;
  doc["flagged"] = f.flagged;
  doc["p_corrected"] = f.p_corrected;
  doc["q_corrected"] = f.q_corrected;
  doc["r_corrected"] = f.r_corrected;
  doc["corrected_residual_rms"] = f.corrected_residual_rms;
  doc["p_target"] = f.p_target;
  doc["q_target"] = f.q_target;
  doc["p_rel_dev"] = number(f.p_rel_dev);
  doc["q_rel_dev"] = number(f.q_rel_dev);
  doc["p_corrected_rel_dev"] = number(f.p_corrected_rel_dev);
  doc["q_corrected_rel_dev"] = number(f.q_corrected_rel_dev);
  doc["c1_quad"] = f.c1_quad;
  doc["c2_quad"] = f.c2_quad;
  doc["c1_closed"] = f.c1_closed;
  doc["c2_closed"] = f.c2_closed;

  std::vector<Column> fit{{"eps", {}}, {"energy", {}}, {"residual", {}}, {"residual_corrected", {}}};
  std::vector<EnergyRun> sorted = runs;
  std::sort(sorted.begin(), sorted.end(),
            [](const EnergyRun& x, const EnergyRun& y) { return x.eps < y.eps; });
  for (const EnergyRun& r : sorted) {
    fit[0].values.push_back(r.eps);
    fit[1].values.push_back(r.energy);
    fit[2].values.push_back(r.energy - (f.p / r.eps + f.q));
    fit[3].values.push_back(r.energy - (f.p_corrected / r.eps + f.q_corrected + f.r_corrected * r.eps));
  }
  write_csv(fs::path(c.out) / "fit_table.csv", fit);
  write_json(fs::path(c.out) / "fit.json", doc);
  out << "p " << format_double(f.p) << " (target " << format_double(f.p_target) << ")  q "
      << format_double(f.q_corrected) << " (target " << format_double(f.q_target) << ")\n";
  return ok;
}

// ---- config ----

std::optional<std::string> find_config(const std::vector<std::string>& args) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Turns the key=value lines into flags placed ahead of the command line, so
// that the last occurrence (the command line) wins.
std::vector<std::string> config_tokens(const std::string& path, const CLI::App& sub) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config " + path);
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key == "config") throw InvalidArgument(path + ": nested config");
    const CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1" || value == "yes") tokens.push_back("--" + key);
    } else {
      tokens.push_back("--" + key);
      tokens.push_back(value);
    }
  }
  return tokens;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Ginzburg-Landau junction solver", "gljunction");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  ProfileArgs profile;
  auto* sp = app.add_subcommand("profile", "1D junction profile and its constants");
  add_common(sp, profile.common);
  sp->add_option("--limit", profile.limit, "report sup|U - limit| over [0, 20]")
      ->check(CLI::IsMember({"neumann", "dirichlet"}));
  sp->add_option("--t-max", profile.t_max, "sample range [-t_max, t_max]")->capture_default_str();
  sp->add_option("--samples", profile.samples, "samples across the range")->capture_default_str();
  sp->add_flag("--variational", profile.variational, "also minimize the discrete 1D functional");
  sp->add_option("--h1d", profile.h1d, "spacing of the 1D grid")->capture_default_str();

  SolveArgs solve_args;
  auto* ss = app.add_subcommand("solve", "minimize the discrete energy");
  add_common(ss, solve_args.common);
  add_domain(ss, solve_args.domain, true);
  ss->add_option("--init", solve_args.init, "ramp, constant or random")
      ->check(CLI::IsMember({"ramp", "constant", "random"}))
      ->capture_default_str();
  ss->add_option("--init-value", solve_args.init_value, "value for --init constant");
  ss->add_option("--seed", solve_args.seed, "seed for --init random")->capture_default_str();
  ss->add_option("--tol", solve_args.tol, "gradient tolerance");
  ss->add_option("--max-iter", solve_args.max_iterations, "Newton iteration budget")
      ->capture_default_str();
  ss->add_option("--k0", solve_args.k0, "interior region t >= k0 eps")->capture_default_str();
  ss->add_option("--c0", solve_args.c0, "expected lower bound on the interior region")
      ->capture_default_str();
  ss->add_flag("--eigen", solve_args.eigen, "also compute lambda1 in cart mode");

  EigenArgs eigen_args;
  auto* se = app.add_subcommand("eigen", "lowest eigenvalue of the linearized energy");
  add_common(se, eigen_args.common);
  add_domain(se, eigen_args.domain, true);

  SweepArgs sweep_args;
  auto* sw = app.add_subcommand("sweep", "radial solves over a list of eps");
  add_common(sw, sweep_args.common);
  add_domain(sw, sweep_args.domain, false);
  sw->add_option("--eps", sweep_args.eps, "comma-separated eps values")
      ->delimiter(',')
      ->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  sw->add_option("--jobs", sweep_args.jobs, "concurrent solves")->capture_default_str();

  AsymptoticsArgs asym;
  auto* sa = app.add_subcommand("asymptotics", "fit G0(eps) = p/eps + q to a sweep table");
  add_common(sa, asym.common);
  sa->add_option("--r1", asym.domain.r1, "radius of Omega_1")->capture_default_str();
  sa->add_option("--r2", asym.domain.r2, "outer radius")->capture_default_str();
  sa->add_option("--table", asym.table, "CSV with eps and energy (or G0) columns")->required();
  sa->add_option("--flag-fraction", asym.flag_fraction, "residual flag level relative to |q|")
      ->capture_default_str();

  try {
    std::vector<std::string> argv = args;
    if (!argv.empty()) {
      if (const auto path = find_config(argv)) {
        CLI::App* sub = app.get_subcommand_no_throw(argv[0]);
        if (sub == nullptr) throw InvalidArgument("--config needs a subcommand first");
        const auto tokens = config_tokens(*path, *sub);
        if (sub == sw) {
          // eps lists accumulate; the command line replaces the file's list
          const bool given = std::find(argv.begin(), argv.end(), "--eps") != argv.end();
          std::vector<std::string> kept;
          for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (given && tokens[i] == "--eps") {
              ++i;
              continue;
            }
            kept.push_back(tokens[i]);
          }
          argv.insert(argv.begin() + 1, kept.begin(), kept.end());
        } else {
          argv.insert(argv.begin() + 1, tokens.begin(), tokens.end());
        }
      }
    }
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : config_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  }

  try {
    if (sp->parsed()) return cmd_profile(profile, out);
    if (ss->parsed()) return cmd_solve(solve_args, out, err);
    if (se->parsed()) return cmd_eigen(eigen_args, out, err);
    if (sw->parsed()) return cmd_sweep(sweep_args, out, err);
    return cmd_asymptotics(asym, out);
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return numerical_failure;
  } catch (const DivergedEnergy& e) {
    err << "error: " << e.what() << '\n';
    return numerical_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  }
}

}  // namespace gljunction::cli
