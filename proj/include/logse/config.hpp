#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "logse/analytic.hpp"
#include "logse/stepping.hpp"

namespace logse {

/// Flat `key = value` experiment configuration. Keys carry section
/// prefixes (grid.*, scheme.*, run.*, scenario.*, refine.*, output.*,
/// accept.*, properties.*); unknown keys are rejected by name.
struct ExperimentConfig {
  std::string command;  // converge-time | converge-space | simulate |
                        // truncation | properties

  // grid.* -- square/cubic domain, identical per axis
  int grid_dim = 2;
  double grid_lo = -5.0;
  double grid_hi = 5.0;
  int grid_cells = 320;  // h = 1/32 on [-5,5]

  // scheme.*
  std::string scheme_name = "bdf1";
  double lambda = -1.0;
  double tau = 0.01;
  bool residual_check = false;

  // run.*
  double t_final = 0.5;

  // scenario.*
  std::string scenario = "gausson";  // or zero, case-i .. case-vi
  double omega = 0.0;

  // refine.* -- convergence/truncation studies
  std::string refine_mode = "time";  // time | space (truncation only)
  double refine_base = 0.1;          // base tau (time) or base h divisor
  int refine_levels = 4;
  double synthetic_order = 0.0;  // > 0 plants errors C*param^order

  // output.*
  std::string output_dir = ".";
  int series_stride = 10;
  int snapshot_stride = 0;

  // accept.* -- order acceptance windows; NaN means scheme default
  double accept_l2_min = nan_default();
  double accept_l2_max = nan_default();
  double accept_h1_min = nan_default();
  double accept_h1_max = nan_default();

  // properties.*
  std::uint64_t seed = 20260823;
  long samples = 100000;

  static double nan_default();

  Scheme scheme() const;
  GridSpec grid() const;
  SchemeParams scheme_params(double tau_level, int n_steps) const;
  GaussonParams gausson_params() const;
  bool scenario_is_gausson() const { return scenario == "gausson"; }

  /// Resolved acceptance windows (scheme defaults where unset):
  /// BDF1 L2 [0.85, 1.15], BDF2 L2 [1.8, 2.2]; spatial always [1.8, 2.2].
  std::pair<double, double> l2_window() const;
  std::pair<double, double> h1_window() const;

  void validate() const;
};

/// One `key = value` assignment (also the CLI override form --key value).
using KeyValue = std::pair<std::string, std::string>;

/// Applies one assignment; throws std::invalid_argument naming any
/// unknown key or unparsable value.
void apply_key(ExperimentConfig& cfg, const std::string& key,
               const std::string& value);

/// Reads a flat config file: `key = value` lines, blank lines and
/// #-comments ignored.
ExperimentConfig parse_config_file(const std::string& path);

/// `<command> [--config PATH] [--key value ...]`; flags override file
/// values. args excludes the program name.
ExperimentConfig parse_cli(const std::vector<std::string>& args);

}  // namespace logse
