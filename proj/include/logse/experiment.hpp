#pragma once

#include <iosfwd>

#include "logse/config.hpp"
#include "logse/diagnostics.hpp"

namespace logse {

// Exit codes shared by the commands and the CLI binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitDivergence = 2;
inline constexpr int kExitAcceptance = 3;

/// Temporal refinement study at fixed h; writes report.csv
/// (tau, l2_error, h1_error, order_l2, order_h1) into cfg.output_dir.
/// Returns kExitOk iff fitted orders land in the acceptance windows.
int cmd_converge_time(const ExperimentConfig& cfg, std::ostream& log);

/// Spatial refinement study at fixed tau; report.csv keyed by h.
int cmd_converge_space(const ExperimentConfig& cfg, std::ostream& log);

/// Local truncation norms across refinements (refine.mode = time|space);
/// report.csv columns param, xi, order.
int cmd_truncation(const ExperimentConfig& cfg, std::ostream& log);

/// Time integration with series.csv (t, mass, energy) and optional
/// snap_<step>.bin snapshots.
int cmd_simulate(const ExperimentConfig& cfg, std::ostream& log);

/// Lemma-inequality and oracle suites; writes properties.txt.
int cmd_properties(const ExperimentConfig& cfg, std::ostream& log);

/// Dispatches on cfg.command; maps DivergenceError to kExitDivergence.
int run_command(const ExperimentConfig& cfg, std::ostream& log);

/// Helper shared with tests: errors of one scheme run against the
/// Gausson on cfg's grid, starting from the exact field at t = 0.
ErrorNorms gausson_run_errors(const ExperimentConfig& cfg, double tau,
                              int n_steps);

}  // namespace logse
