#include "logse/nonlinearity.hpp"

namespace logse {

Complex f_log_eps(Complex z, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("f_log_eps: requires eps > 0");
  return z * std::log(eps + std::abs(z));
}

double F_primitive(double rho, double lambda) {
  if (rho < 0.0) throw std::invalid_argument("F_primitive: requires rho >= 0");
  if (rho == 0.0) return 0.0;  // limit value of rho ln rho - rho
  return lambda * (rho * std::log(rho) - rho);
}

GridFunction apply_f(const GridFunction& u) {
  GridFunction out(u.spec());
  const auto* in = u.values().data();
  auto* ov = out.values().data();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.values().size());
  // f(0) = 0, so applying f over the full lattice keeps the boundary zero
#pragma omp parallel for
  for (std::ptrdiff_t i = 0; i < n; ++i) ov[i] = f_log(in[i]);
  return out;
}

}  // namespace logse
