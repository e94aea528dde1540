#include "logse/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "logse/properties.hpp"
#include "logse/snapshot.hpp"

namespace logse {

namespace {

namespace fs = std::filesystem;

std::ofstream open_output(const ExperimentConfig& cfg,
                          const std::string& name) {
  fs::create_directories(cfg.output_dir);
  const fs::path p = fs::path(cfg.output_dir) / name;
  std::ofstream out(p);
  if (!out)
    throw std::invalid_argument("experiment: cannot write " + p.string());
  out.precision(12);
  return out;
}

bool in_window(double x, std::pair<double, double> w) {
  return x >= w.first && x <= w.second;
}

void write_convergence_csv(std::ofstream& out, const std::string& param_name,
                           const ConvergenceReport& r) {
  out << param_name << ",l2_error,h1_error,order_l2,order_h1\n";
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    out << r.params[i] << "," << r.l2[i] << "," << r.h1[i] << ",";
    if (i == 0)
      out << ",";
    else
      out << r.order_l2.pairwise[i - 1] << "," << r.order_h1.pairwise[i - 1];
    out << "\n";
  }
  out << "# fitted_order_l2 = " << r.order_l2.fitted
      << ", fitted_order_h1 = " << r.order_h1.fitted << "\n";
}

int judge_orders(const ExperimentConfig& cfg, const ConvergenceReport& r,
                 std::ostream& log) {
  const auto wl2 = cfg.l2_window(), wh1 = cfg.h1_window();
  log << "fitted orders: l2 = " << r.order_l2.fitted
      << " (window [" << wl2.first << ", " << wl2.second << "]), h1 = "
      << r.order_h1.fitted << " (window [" << wh1.first << ", " << wh1.second
      << "])\n";
  if (r.order_l2.warning || r.order_h1.warning)
    log << "warning: non-monotone error sequence\n";
  const bool ok = in_window(r.order_l2.fitted, wl2) &&
                  in_window(r.order_h1.fitted, wh1);
  return ok ? kExitOk : kExitAcceptance;
}

GridFunction scenario_initial(const ExperimentConfig& cfg,
                              const GridSpec& grid) {
  if (cfg.scenario_is_gausson())
    return exact_on_grid(cfg.gausson_params(), grid, 0.0);
  if (cfg.scenario == "zero") return GridFunction(grid);
  return initial_condition(parse_dynamics_case(cfg.scenario), grid);
}

}  // namespace

ErrorNorms gausson_run_errors(const ExperimentConfig& cfg, double tau,
                              int n_steps) {
  const GridSpec grid = cfg.grid();
  const GaussonParams gp = cfg.gausson_params();
  const SchemeParams p = cfg.scheme_params(tau, n_steps);
  const GridFunction u0 = exact_on_grid(gp, grid, 0.0);
  const GridFunction u = run_simulation(u0, p);
  const GridFunction exact = exact_on_grid(gp, grid, p.t_final());
  return error_norms(u, exact);
}

int cmd_converge_time(const ExperimentConfig& cfg, std::ostream& log) {
  std::vector<double> taus, l2s, h1s;
  for (int j = 1; j <= cfg.refine_levels; ++j) {
    const double tau = cfg.refine_base * std::pow(2.0, -j);
    taus.push_back(tau);
    if (cfg.synthetic_order > 0.0) {
      const double e = std::pow(tau, cfg.synthetic_order);
      l2s.push_back(e);
      h1s.push_back(e);
      continue;
    }
    const int n = static_cast<int>(std::llround(cfg.t_final / tau));
    const ErrorNorms e = gausson_run_errors(cfg, tau, n);
    log << "tau = " << tau << ": l2 = " << e.l2 << ", h1 = " << e.h1 << "\n";
    l2s.push_back(e.l2);
    h1s.push_back(e.h1);
  }
  const ConvergenceReport r = make_report(taus, l2s, h1s);
  auto out = open_output(cfg, "report.csv");
  write_convergence_csv(out, "tau", r);
  return judge_orders(cfg, r, log);
}

int cmd_converge_space(const ExperimentConfig& cfg, std::ostream& log) {
  const double width = cfg.grid_hi - cfg.grid_lo;
  std::vector<double> hs, l2s, h1s;
  for (int j = 0; j < cfg.refine_levels; ++j) {
    const double h = cfg.refine_base * std::pow(2.0, -j);
    const int cells = static_cast<int>(std::llround(width / h));
    if (std::abs(cells * h - width) > 1e-9 * width)
      throw std::invalid_argument(
          "converge-space: refine.base must divide the domain width");
    hs.push_back(h);
    if (cfg.synthetic_order > 0.0) {
      const double e = std::pow(h, cfg.synthetic_order);
      l2s.push_back(e);
      h1s.push_back(e);
      continue;
    }
    ExperimentConfig level = cfg;
    level.grid_cells = cells;
    const int n = static_cast<int>(std::llround(cfg.t_final / cfg.tau));
    const ErrorNorms e = gausson_run_errors(level, cfg.tau, n);
    log << "h = " << h << ": l2 = " << e.l2 << ", h1 = " << e.h1 << "\n";
    l2s.push_back(e.l2);
    h1s.push_back(e.h1);
  }
  const ConvergenceReport r = make_report(hs, l2s, h1s);
  auto out = open_output(cfg, "report.csv");
  write_convergence_csv(out, "h", r);
  return judge_orders(cfg, r, log);
}

int cmd_truncation(const ExperimentConfig& cfg, std::ostream& log) {
  const bool time_mode = cfg.refine_mode == "time";
  const GaussonParams gp_base = cfg.gausson_params();
  std::vector<double> params, xis;

  for (int j = 0; j < cfg.refine_levels; ++j) {
    double tau = cfg.tau;
    GridSpec grid = cfg.grid();
    double param;
    if (time_mode) {
      tau = cfg.refine_base * std::pow(2.0, -(j + 1));
      param = tau;
    } else {
      const double width = cfg.grid_hi - cfg.grid_lo;
      const double h = cfg.refine_base * std::pow(2.0, -j);
      ExperimentConfig level = cfg;
      level.grid_cells = static_cast<int>(std::llround(width / h));
      grid = level.grid();
      param = h;
    }
    auto sample = [&](double t) { return exact_on_grid(gp_base, grid, t); };
    const int n = cfg.scheme() == Scheme::Bdf2 ? 1 : 0;
    const double xi =
        truncation_error(cfg.scheme(), sample, tau, n, cfg.lambda);
    log << (time_mode ? "tau = " : "h = ") << param << ": xi = " << xi << "\n";
    params.push_back(param);
    xis.push_back(xi);
  }

  const OrderEstimate est = estimate_order(params, xis);
  auto out = open_output(cfg, "report.csv");
  out << "param,xi,order\n";
  for (std::size_t i = 0; i < params.size(); ++i) {
    out << params[i] << "," << xis[i] << ",";
    if (i > 0) out << est.pairwise[i - 1];
    out << "\n";
  }
  out << "# fitted_order = " << est.fitted << "\n";

  // default windows: first order (BDF1) or second order up to the
  // logarithmic factor (BDF2) in time; second order in space
  std::pair<double, double> w;
  if (!time_mode)
    w = {1.8, 2.2};
  else if (cfg.scheme() == Scheme::Bdf2)
    w = {1.7, 2.2};
  else
    w = {0.85, 1.15};
  if (!std::isnan(cfg.accept_l2_min)) w.first = cfg.accept_l2_min;
  if (!std::isnan(cfg.accept_l2_max)) w.second = cfg.accept_l2_max;
  log << "fitted truncation order = " << est.fitted << " (window ["
      << w.first << ", " << w.second << "])\n";
  return in_window(est.fitted, w) ? kExitOk : kExitAcceptance;
}

int cmd_simulate(const ExperimentConfig& cfg, std::ostream& log) {
  const GridSpec grid = cfg.grid();
  const GridFunction u0 = scenario_initial(cfg, grid);
  const int n_steps = static_cast<int>(std::llround(cfg.t_final / cfg.tau));
  const SchemeParams p = cfg.scheme_params(cfg.tau, n_steps);

  auto series = open_output(cfg, "series.csv");
  series << "t,mass,energy\n";

  SimulationHooks hooks;
  hooks.series_stride = cfg.series_stride;
  hooks.snapshot_stride = cfg.snapshot_stride;
  hooks.on_series = [&](int, double t, const GridFunction& u) {
    series << t << "," << mass(u) << "," << energy(u, cfg.lambda) << "\n";
  };
  hooks.on_snapshot = [&](int step, double t, const GridFunction& u) {
    std::ostringstream name;
    name << "snap_" << step << ".bin";
    const fs::path path = fs::path(cfg.output_dir) / name.str();
    write_snapshot(path.string(), u,
                   {t, cfg.scheme_name, cfg.lambda, cfg.tau});
  };

  run_simulation(u0, p, hooks);
  log << "simulated " << n_steps << " steps to t = " << p.t_final() << "\n";
  return kExitOk;
}

int cmd_properties(const ExperimentConfig& cfg, std::ostream& log) {
  std::vector<PropertyResult> results =
      run_nonlinearity_properties(cfg.seed, cfg.samples);
  for (auto& r : run_grid_properties(cfg.seed + 1, cfg.samples))
    results.push_back(std::move(r));
  for (auto& r : run_solver_oracle(cfg.seed + 2, 100))
    results.push_back(std::move(r));

  auto out = open_output(cfg, "properties.txt");
  bool all_ok = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << " " << r.name
        << " samples=" << r.samples << " violations=" << r.violations
        << " worst_margin=" << r.worst_margin;
    if (!r.passed) out << " witness: " << r.witness;
    out << "\n";
    log << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
    all_ok = all_ok && r.passed;
  }
  return all_ok ? kExitOk : kExitAcceptance;
}

int run_command(const ExperimentConfig& cfg, std::ostream& log) {
  try {
    if (cfg.command == "converge-time") return cmd_converge_time(cfg, log);
    if (cfg.command == "converge-space") return cmd_converge_space(cfg, log);
    if (cfg.command == "truncation") return cmd_truncation(cfg, log);
    if (cfg.command == "simulate") return cmd_simulate(cfg, log);
    if (cfg.command == "properties") return cmd_properties(cfg, log);
  } catch (const DivergenceError& e) {
    log << "divergence at step " << e.step << ": " << e.what() << "\n";
    return kExitDivergence;
  }
  throw std::invalid_argument("experiment: unknown command: " + cfg.command);
}

}  // namespace logse
