#pragma once

#include "logse/grid.hpp"

namespace logse {

/// Exact Gausson solitary wave of i u_t + lap u = lambda u ln|u|^2:
///   u(x,t) = exp(-2 i lambda omega t + omega + d/2 + (lambda/2)|x|^2),
/// square-integrable for lambda < 0. With omega = 0 the profile is
/// stationary.
struct GaussonParams {
  double omega = 0.0;
  double lambda = -1.0;
  int dim = 2;
};

Complex gausson(std::span<const double> x, double t, const GaussonParams& p);

/// Samples the Gausson at grid nodes; boundary forced to zero.
GridFunction exact_on_grid(const GaussonParams& p, const GridSpec& spec,
                           double t);

/// Closed-form mass of the (untruncated) Gausson,
/// e^{2 omega + d} (pi/|lambda|)^{d/2}.
double gausson_mass(const GaussonParams& p);

/// Superposition of two Gaussian wave packets (no exact solution).
struct TwoGaussonParams {
  double b1 = 0.0, b2 = 0.0;
  std::array<double, 2> v1{}, v2{};
  std::array<double, 2> x1{}, x2{};
  double lambda = -1.0;
};

GridFunction two_gausson_on_grid(const TwoGaussonParams& p,
                                 const GridSpec& spec);

/// 2D dynamics scenarios: single Gausson, vortex pair, vortex dipole,
/// and three two-Gausson interactions.
enum class DynamicsCase { I, II, III, IV, V, VI };

DynamicsCase parse_dynamics_case(const std::string& name);
GridFunction initial_condition(DynamicsCase c, const GridSpec& spec);

}  // namespace logse
