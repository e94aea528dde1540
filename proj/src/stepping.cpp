#include "logse/stepping.hpp"

#include <iostream>
#include <sstream>

namespace logse {

void SchemeParams::validate() const {
  if (lambda == 0.0) throw std::invalid_argument("SchemeParams: lambda must be nonzero");
  if (!(tau > 0.0)) throw std::invalid_argument("SchemeParams: tau must be > 0");
  if (n_steps < 0) throw std::invalid_argument("SchemeParams: n_steps must be >= 0");
  if (scheme == Scheme::Bdf2 && tau >= 1.0)
    std::cerr << "warning: BDF2 with tau >= 1 is outside the analyzed regime\n";
}

TimeStepper::TimeStepper(const GridSpec& spec, const SchemeParams& p)
    : spec_(spec), p_(p), solver_(spec) {
  p.validate();
}

namespace {

GridFunction assemble_rhs_bdf1(const GridFunction& u, double lambda,
                               double tau) {
  GridFunction rhs(u.spec());
  const Complex i_over_tau(0.0, 1.0 / tau);
  const auto* pu = u.values().data();
  auto* pr = rhs.values().data();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rhs.values().size());
#pragma omp parallel for
  for (std::ptrdiff_t i = 0; i < n; ++i)
    pr[i] = 2.0 * lambda * f_log(pu[i]) + i_over_tau * pu[i];
  return rhs;
}

GridFunction assemble_rhs_bdf2(const GridFunction& u, const GridFunction& up,
                               double lambda, double tau) {
  GridFunction rhs(u.spec());
  const Complex i_half_tau(0.0, 0.5 / tau);
  const auto* pu = u.values().data();
  const auto* pp = up.values().data();
  auto* pr = rhs.values().data();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rhs.values().size());
#pragma omp parallel for
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Complex extrap = 2.0 * pu[i] - pp[i];
    pr[i] = 2.0 * lambda * f_log(extrap) + i_half_tau * (4.0 * pu[i] - pp[i]);
  }
  return rhs;
}

}  // namespace

GridFunction TimeStepper::advance(Complex sigma, const GridFunction& rhs,
                                  double scale) const {
  GridFunction next = solver_.solve(sigma, rhs);
  if (p_.residual_check) {
    // residual of the linear system (sigma I + lap) w = rhs
    GridFunction r = lincomb(sigma, next, 1.0, discrete_laplacian(next));
    r = lincomb(1.0, r, -1.0, rhs);
    last_residual_ = norm_l2(r) / std::max(1.0, scale);
    if (last_residual_ > 1e-9) {
      std::ostringstream os;
      os << "step residual " << last_residual_ << " exceeds 1e-9";
      throw std::runtime_error(os.str());
    }
  }
  return next;
}

GridFunction TimeStepper::bdf1_step(const GridFunction& u) const {
  if (!(u.spec() == spec_)) throw std::invalid_argument("bdf1_step: grid spec mismatch");
  const GridFunction rhs = assemble_rhs_bdf1(u, p_.lambda, p_.tau);
  return advance(Complex(0.0, 1.0 / p_.tau), rhs, norm_l2(u) / p_.tau);
}

GridFunction TimeStepper::bdf2_step(const GridFunction& u,
                                    const GridFunction& u_prev) const {
  if (!(u.spec() == spec_) || !(u_prev.spec() == spec_))
    throw std::invalid_argument("bdf2_step: grid spec mismatch");
  const GridFunction rhs = assemble_rhs_bdf2(u, u_prev, p_.lambda, p_.tau);
  return advance(Complex(0.0, 1.5 / p_.tau), rhs, norm_l2(u) / p_.tau);
}

GridFunction bdf1_step(const GridFunction& u, const SchemeParams& p) {
  return TimeStepper(u.spec(), p).bdf1_step(u);
}

GridFunction bdf2_step(const GridFunction& u, const GridFunction& u_prev,
                       const SchemeParams& p) {
  return TimeStepper(u.spec(), p).bdf2_step(u, u_prev);
}

GridFunction bdf2_starter(const GridFunction& u0, const SchemeParams& p) {
  return TimeStepper(u0.spec(), p).bdf2_starter(u0);
}

GridFunction run_simulation(const GridFunction& u0, const SchemeParams& p,
                            const SimulationHooks& hooks) {
  p.validate();
  const TimeStepper stepper(u0.spec(), p);

  auto fire = [&](int step, const GridFunction& u) {
    const double t = step * p.tau;
    const bool last = step == p.n_steps;
    if (hooks.on_series && hooks.series_stride > 0 &&
        (step % hooks.series_stride == 0 || last))
      hooks.on_series(step, t, u);
    if (hooks.on_snapshot && hooks.snapshot_stride > 0 &&
        (step % hooks.snapshot_stride == 0 || last))
      hooks.on_snapshot(step, t, u);
  };

  GridFunction u = u0;
  fire(0, u);
  if (p.n_steps == 0) return u;

  GridFunction prev(u0.spec());
  const bool two_step = p.scheme == Scheme::Bdf2;
  for (int n = 0; n < p.n_steps; ++n) {
    GridFunction next = [&] {
      if (!two_step || n == 0) return stepper.bdf1_step(u);
      return stepper.bdf2_step(u, prev);
    }();
    if (!next.is_finite()) {
      std::ostringstream os;
      os << "non-finite state after step " << n + 1;
      throw DivergenceError(n + 1, os.str());
    }
    if (two_step) prev = std::move(u);
    u = std::move(next);
    fire(n + 1, u);
  }
  return u;
}

}  // namespace logse
