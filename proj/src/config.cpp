#include "logse/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace logse {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double x;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: invalid value for " + key + ": " + v);
  }
  if (pos != v.size())
    throw std::invalid_argument("config: invalid value for " + key + ": " + v);
  return x;
}

int parse_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long x;
  try {
    x = std::stol(v, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: invalid value for " + key + ": " + v);
  }
  if (pos != v.size())
    throw std::invalid_argument("config: invalid value for " + key + ": " + v);
  return static_cast<int>(x);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("config: invalid boolean for " + key + ": " + v);
}

}  // namespace

double ExperimentConfig::nan_default() {
  return std::numeric_limits<double>::quiet_NaN();
}

Scheme ExperimentConfig::scheme() const {
  if (scheme_name == "bdf1") return Scheme::Bdf1;
  if (scheme_name == "bdf2") return Scheme::Bdf2;
  throw std::invalid_argument("config: unknown scheme.name: " + scheme_name);
}

GridSpec ExperimentConfig::grid() const {
  const std::array<double, 3> lo{grid_lo, grid_lo, grid_lo};
  const std::array<double, 3> hi{grid_hi, grid_hi, grid_hi};
  const std::array<int, 3> cells{grid_cells, grid_cells, grid_cells};
  return GridSpec::make(grid_dim, std::span(lo).first(grid_dim),
                        std::span(hi).first(grid_dim),
                        std::span(cells).first(grid_dim));
}

SchemeParams ExperimentConfig::scheme_params(double tau_level,
                                             int n_steps) const {
  SchemeParams p;
  p.lambda = lambda;
  p.tau = tau_level;
  p.n_steps = n_steps;
  p.scheme = scheme();
  p.residual_check = residual_check;
  return p;
}

GaussonParams ExperimentConfig::gausson_params() const {
  GaussonParams p;
  p.omega = omega;
  p.lambda = lambda;
  p.dim = grid_dim;
  return p;
}

std::pair<double, double> ExperimentConfig::l2_window() const {
  double lo = accept_l2_min, hi = accept_l2_max;
  const bool spatial = command == "converge-space";
  if (std::isnan(lo)) lo = (spatial || scheme() == Scheme::Bdf2) ? 1.8 : 0.85;
  if (std::isnan(hi)) hi = (spatial || scheme() == Scheme::Bdf2) ? 2.2 : 1.15;
  return {lo, hi};
}

std::pair<double, double> ExperimentConfig::h1_window() const {
  double lo = accept_h1_min, hi = accept_h1_max;
  if (command == "converge-space") {
    if (std::isnan(lo)) lo = 1.8;
    if (std::isnan(hi)) hi = 2.2;
  } else {
    // temporal H1 floors: BDF1 tau^{1/2}, BDF2 tau^{3/2}|ln tau|
    if (std::isnan(lo)) lo = scheme() == Scheme::Bdf2 ? 1.4 : 0.45;
    if (std::isnan(hi)) hi = std::numeric_limits<double>::infinity();
  }
  return {lo, hi};
}

void ExperimentConfig::validate() const {
  static const std::vector<std::string> commands{
      "converge-time", "converge-space", "simulate", "truncation",
      "properties"};
  bool known = false;
  for (const auto& c : commands) known = known || c == command;
  if (!known)
    throw std::invalid_argument("config: unknown command: " + command);

  grid();    // throws on bad bounds/cells
  scheme();  // throws on bad name
  if (!(tau > 0.0)) throw std::invalid_argument("config: scheme.tau must be > 0");
  if (lambda == 0.0)
    throw std::invalid_argument("config: scheme.lambda must be nonzero");
  if (!(t_final > 0.0))
    throw std::invalid_argument("config: run.t_final must be > 0");

  if (!scenario_is_gausson() && scenario != "zero")
    parse_dynamics_case(scenario);

  const bool needs_refine =
      command == "converge-time" || command == "converge-space" ||
      command == "truncation";
  if (needs_refine) {
    if (refine_levels < 3)
      throw std::invalid_argument(
          "config: refine.levels must be >= 3 for convergence commands");
    if (!(refine_base > 0.0))
      throw std::invalid_argument("config: refine.base must be > 0");
    if (refine_mode != "time" && refine_mode != "space")
      throw std::invalid_argument("config: refine.mode must be time or space");
    if (!scenario_is_gausson() && synthetic_order == 0.0)
      throw std::invalid_argument(
          "config: command " + command + " needs scenario.name = gausson");
  }
  if (series_stride < 0 || snapshot_stride < 0)
    throw std::invalid_argument("config: strides must be >= 0");
  if (samples <= 0)
    throw std::invalid_argument("config: properties.samples must be > 0");
}

void apply_key(ExperimentConfig& cfg, const std::string& key,
               const std::string& value) {
  if (key == "command") cfg.command = value;
  else if (key == "grid.dim") cfg.grid_dim = parse_int(key, value);
  else if (key == "grid.lo") cfg.grid_lo = parse_double(key, value);
  else if (key == "grid.hi") cfg.grid_hi = parse_double(key, value);
  else if (key == "grid.cells") cfg.grid_cells = parse_int(key, value);
  else if (key == "scheme.name") cfg.scheme_name = value;
  else if (key == "scheme.lambda") cfg.lambda = parse_double(key, value);
  else if (key == "scheme.tau") cfg.tau = parse_double(key, value);
  else if (key == "scheme.residual_check")
    cfg.residual_check = parse_bool(key, value);
  else if (key == "run.t_final") cfg.t_final = parse_double(key, value);
  else if (key == "scenario.name") cfg.scenario = value;
  else if (key == "scenario.omega") cfg.omega = parse_double(key, value);
  else if (key == "refine.mode") cfg.refine_mode = value;
  else if (key == "refine.base") cfg.refine_base = parse_double(key, value);
  else if (key == "refine.levels") cfg.refine_levels = parse_int(key, value);
  else if (key == "refine.synthetic_order")
    cfg.synthetic_order = parse_double(key, value);
  else if (key == "output.dir") cfg.output_dir = value;
  else if (key == "output.series_stride")
    cfg.series_stride = parse_int(key, value);
  else if (key == "output.snapshot_stride")
    cfg.snapshot_stride = parse_int(key, value);
  else if (key == "accept.l2_min") cfg.accept_l2_min = parse_double(key, value);
  else if (key == "accept.l2_max") cfg.accept_l2_max = parse_double(key, value);
  else if (key == "accept.h1_min") cfg.accept_h1_min = parse_double(key, value);
  else if (key == "accept.h1_max") cfg.accept_h1_max = parse_double(key, value);
  else if (key == "properties.seed")
    cfg.seed = static_cast<std::uint64_t>(std::stoull(value));
  else if (key == "properties.samples")
    cfg.samples = parse_int(key, value);
  else
    throw std::invalid_argument("config: unknown key: " + key);
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open file: " + path);
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: " + path + ":" +
                                  std::to_string(lineno) +
                                  ": expected key = value");
    apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

ExperimentConfig parse_cli(const std::vector<std::string>& args) {
  if (args.empty())
    throw std::invalid_argument(
        "usage: logse-lab <command> [--config PATH] [--key value ...]");
  const std::string command = args[0];

  // the config file loads first so flags can override it
  std::string config_path;
  std::vector<KeyValue> overrides;
  for (std::size_t i = 1; i < args.size(); i += 2) {
    const std::string& flag = args[i];
    if (flag.size() < 3 || flag.substr(0, 2) != "--")
      throw std::invalid_argument("config: expected --key, got: " + flag);
    if (i + 1 >= args.size())
      throw std::invalid_argument("config: missing value for " + flag);
    const std::string key = flag.substr(2);
    if (key == "config")
      config_path = args[i + 1];
    else
      overrides.emplace_back(key, args[i + 1]);
  }

  ExperimentConfig cfg =
      config_path.empty() ? ExperimentConfig{} : parse_config_file(config_path);
  cfg.command = command;
  for (const auto& [k, v] : overrides) {
    if (k == "command")
      throw std::invalid_argument("config: pass the command positionally");
    apply_key(cfg, k, v);
  }
  cfg.validate();
  return cfg;
}

}  // namespace logse
