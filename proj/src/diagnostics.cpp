#include "logse/diagnostics.hpp"

#include <cmath>

namespace logse {

double mass(const GridFunction& u) {
  const double n = norm_l2(u);
  return n * n;
}

double energy(const GridFunction& u, double lambda) {
  const double grad = seminorm_h1(u);
  const GridSpec& s = u.spec();
  double scale = 1.0;
  for (int a = 0; a < s.dim; ++a) scale *= s.spacing(a);
  const auto e = s.extents();
  double pot = 0.0;
  for (int j = 0; j < e[0]; ++j)
    for (int k = 0; k < e[1]; ++k)
      for (int l = 0; l < e[2]; ++l)
        if (u.interior3(j, k, l)) {
          const double a = std::abs(u.at(j, k, l));
          pot += F_primitive(a * a, lambda);
        }
  return grad * grad + scale * pot;
}

ErrorNorms error_norms(const GridFunction& numeric, const GridFunction& exact) {
  if (!(numeric.spec() == exact.spec()))
    throw std::invalid_argument("error_norms: grid spec mismatch");
  const GridFunction e = lincomb(1.0, exact, -1.0, numeric);
  return {norm_l2(e), seminorm_h1(e)};
}

double truncation_error(Scheme scheme,
                        const std::function<GridFunction(double)>& sample,
                        double tau, int n, double lambda) {
  if (n < 0) throw std::invalid_argument("truncation_error: requires n >= 0");
  const Complex i_unit(0.0, 1.0);

  if (scheme == Scheme::Bdf1 || n == 0) {
    // xi^n = i (U^{n+1} - U^n)/tau + lap U^{n+1} - 2 lambda f(U^n)
    // (for BDF2 with n = 0 this is the starter defect)
    const GridFunction un = sample(n * tau);
    const GridFunction un1 = sample((n + 1) * tau);
    GridFunction xi = lincomb(i_unit / tau, un1, -i_unit / tau, un);
    xi = lincomb(1.0, xi, 1.0, discrete_laplacian(un1));
    xi = lincomb(1.0, xi, -2.0 * lambda, apply_f(un));
    return norm_l2(xi);
  }

  // xi^n = i (3U^{n+1} - 4U^n + U^{n-1})/(2tau) + lap U^{n+1}
  //        - 2 lambda f(2U^n - U^{n-1})
  const GridFunction um1 = sample((n - 1) * tau);
  const GridFunction un = sample(n * tau);
  const GridFunction un1 = sample((n + 1) * tau);
  GridFunction xi = lincomb(1.5 * i_unit / tau, un1, -2.0 * i_unit / tau, un);
  xi = lincomb(1.0, xi, 0.5 * i_unit / tau, um1);
  xi = lincomb(1.0, xi, 1.0, discrete_laplacian(un1));
  const GridFunction extrap = lincomb(2.0, un, -1.0, um1);
  xi = lincomb(1.0, xi, -2.0 * lambda, apply_f(extrap));
  return norm_l2(xi);
}

OrderEstimate estimate_order(std::span<const double> params,
                             std::span<const double> errors) {
  if (params.size() != errors.size())
    throw std::invalid_argument("estimate_order: size mismatch");
  const std::size_t n = params.size();
  if (n < 3) throw std::invalid_argument("estimate_order: needs >= 3 levels");
  for (std::size_t i = 1; i < n; ++i) {
    const double ratio = params[i - 1] / params[i];
    if (std::abs(ratio - 2.0) > 1e-9)
      throw std::invalid_argument("estimate_order: params must halve per level");
  }
  OrderEstimate est;
  for (std::size_t i = 1; i < n; ++i) {
    if (!(errors[i] > 0.0) || !(errors[i - 1] > 0.0)) {
      est.warning = true;
      est.pairwise.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    est.pairwise.push_back(std::log2(errors[i - 1] / errors[i]));
    if (errors[i] >= errors[i - 1]) est.warning = true;
  }
  // least-squares slope of ln e against ln param
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(errors[i] > 0.0)) continue;
    const double x = std::log(params[i]);
    const double y = std::log(errors[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++m;
  }
  if (m >= 2)
    est.fitted = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  else
    est.warning = true;
  return est;
}

ConvergenceReport make_report(std::vector<double> params,
                              std::vector<double> l2, std::vector<double> h1) {
  ConvergenceReport r;
  r.order_l2 = estimate_order(params, l2);
  r.order_h1 = estimate_order(params, h1);
  r.params = std::move(params);
  r.l2 = std::move(l2);
  r.h1 = std::move(h1);
  return r;
}

}  // namespace logse
