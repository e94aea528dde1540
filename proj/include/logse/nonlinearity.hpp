#pragma once

#include <limits>

#include "logse/grid.hpp"

namespace logse {

/// f(z) = z ln|z| with f(0) = 0. Magnitudes below the smallest positive
/// normal double are treated as zero so ln of a subnormal never produces
/// -inf.
inline Complex f_log(Complex z) {
  const double a = std::abs(z);
  if (a < std::numeric_limits<double>::min()) return Complex{};
  return z * std::log(a);
}

/// Regularized nonlinearity f_eps(z) = z ln(eps + |z|), eps > 0.
Complex f_log_eps(Complex z, double eps);

/// Energy density primitive F(rho) = lambda (rho ln rho - rho), F(0) = 0.
double F_primitive(double rho, double lambda);

/// Elementwise f_log over a grid function; boundary stays zero.
GridFunction apply_f(const GridFunction& u);

/// Interaction parameters; eps = 0 means the non-regularized nonlinearity.
/// eps is exposed for diagnostics and property tests only, the schemes
/// never regularize.
struct LogNonlinearity {
  double lambda;
  double eps = 0.0;

  LogNonlinearity(double lambda_, double eps_ = 0.0)
      : lambda(lambda_), eps(eps_) {
    if (lambda == 0.0) throw std::invalid_argument("LogNonlinearity: lambda must be nonzero");
    if (eps < 0.0) throw std::invalid_argument("LogNonlinearity: eps must be >= 0");
  }

  Complex f(Complex z) const { return eps > 0.0 ? f_log_eps(z, eps) : f_log(z); }
  double energy_density(double rho) const { return F_primitive(rho, lambda); }
};

}  // namespace logse
