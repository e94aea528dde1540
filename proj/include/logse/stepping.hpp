#pragma once

#include <functional>

#include "logse/nonlinearity.hpp"
#include "logse/sine_spectral.hpp"

namespace logse {

enum class Scheme { Bdf1, Bdf2 };

struct SchemeParams {
  double lambda = -1.0;
  double tau = 0.01;
  int n_steps = 1;
  Scheme scheme = Scheme::Bdf1;
  bool residual_check = false;

  double t_final() const { return tau * n_steps; }
  void validate() const;
};

struct DivergenceError : std::runtime_error {
  int step;
  DivergenceError(int step_, const std::string& what)
      : std::runtime_error(what), step(step_) {}
};

/// Linearly implicit BDF steppers: one shifted-Laplacian solve per step,
/// the nonlinearity evaluated at the explicit (extrapolated) argument.
class TimeStepper {
 public:
  TimeStepper(const GridSpec& spec, const SchemeParams& p);

  /// u^{n+1} from (i/tau I + lap) u^{n+1} = 2 lambda f(u^n) + (i/tau) u^n.
  GridFunction bdf1_step(const GridFunction& u) const;

  /// u^{n+1} from (3i/(2tau) I + lap) u^{n+1}
  ///   = 2 lambda f(2u^n - u^{n-1}) + (i/(2tau))(4u^n - u^{n-1}).
  GridFunction bdf2_step(const GridFunction& u, const GridFunction& u_prev) const;

  /// First BDF2 level; identical computation to bdf1_step.
  GridFunction bdf2_starter(const GridFunction& u0) const { return bdf1_step(u0); }

  /// Relative scheme-equation residual of the most recent step
  /// (only populated when params.residual_check is set).
  double last_residual() const { return last_residual_; }

 private:
  GridSpec spec_;
  SchemeParams p_;
  ShiftedLaplacianSolver solver_;
  mutable double last_residual_ = 0.0;

  GridFunction advance(Complex sigma, const GridFunction& rhs,
                       double scale) const;
};

// Spec-level free functions (build a stepper per call; prefer TimeStepper
// inside loops).
GridFunction bdf1_step(const GridFunction& u, const SchemeParams& p);
GridFunction bdf2_step(const GridFunction& u, const GridFunction& u_prev,
                       const SchemeParams& p);
GridFunction bdf2_starter(const GridFunction& u0, const SchemeParams& p);

struct SimulationHooks {
  int series_stride = 10;   // 0 disables series callbacks
  int snapshot_stride = 0;  // 0 disables snapshot callbacks
  std::function<void(int step, double t, const GridFunction& u)> on_series;
  std::function<void(int step, double t, const GridFunction& u)> on_snapshot;
};

/// Advances n_steps; hooks fire at step 0 and every stride thereafter
/// plus the final step. Throws DivergenceError on NaN/Inf states.
GridFunction run_simulation(const GridFunction& u0, const SchemeParams& p,
                            const SimulationHooks& hooks = {});

}  // namespace logse
