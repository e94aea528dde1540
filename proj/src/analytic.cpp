#include "logse/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace logse {

Complex gausson(std::span<const double> x, double t, const GaussonParams& p) {
  if (!(p.lambda < 0.0))
    throw std::invalid_argument("gausson: requires lambda < 0");
  if (p.dim < 1 || p.dim > 3 || x.size() < static_cast<std::size_t>(p.dim))
    throw std::invalid_argument("gausson: bad dimension");
  double r2 = 0.0;
  for (int i = 0; i < p.dim; ++i) r2 += x[i] * x[i];
  const double amp = p.omega + 0.5 * p.dim + 0.5 * p.lambda * r2;
  const double phase = -2.0 * p.lambda * p.omega * t;
  return std::exp(amp) * Complex(std::cos(phase), std::sin(phase));
}

GridFunction exact_on_grid(const GaussonParams& p, const GridSpec& spec,
                           double t) {
  if (spec.dim != p.dim)
    throw std::invalid_argument("exact_on_grid: dimension mismatch");
  GridFunction u(spec);
  u.fill_interior([&](const std::array<double, 3>& x) {
    return gausson(std::span<const double>(x.data(), p.dim), t, p);
  });
  return u;
}

double gausson_mass(const GaussonParams& p) {
  return std::exp(2.0 * p.omega + p.dim) *
         std::pow(std::numbers::pi / -p.lambda, 0.5 * p.dim);
}

GridFunction two_gausson_on_grid(const TwoGaussonParams& p,
                                 const GridSpec& spec) {
  if (spec.dim != 2)
    throw std::invalid_argument("two_gausson_on_grid: requires dim = 2");
  GridFunction u(spec);
  u.fill_interior([&](const std::array<double, 3>& x) {
    auto packet = [&](double b, const std::array<double, 2>& v,
                      const std::array<double, 2>& c) {
      const double dx = x[0] - c[0], dy = x[1] - c[1];
      const double amp = 0.5 * p.lambda * (dx * dx + dy * dy);
      const double phase = x[0] * v[0] + x[1] * v[1];
      return b * std::exp(amp) * Complex(std::cos(phase), std::sin(phase));
    };
    return packet(p.b1, p.v1, p.x1) + packet(p.b2, p.v2, p.x2);
  });
  return u;
}

DynamicsCase parse_dynamics_case(const std::string& name) {
  if (name == "case-i" || name == "I") return DynamicsCase::I;
  if (name == "case-ii" || name == "II") return DynamicsCase::II;
  if (name == "case-iii" || name == "III") return DynamicsCase::III;
  if (name == "case-iv" || name == "IV") return DynamicsCase::IV;
  if (name == "case-v" || name == "V") return DynamicsCase::V;
  if (name == "case-vi" || name == "VI") return DynamicsCase::VI;
  throw std::invalid_argument("unknown dynamics case: " + name);
}

GridFunction initial_condition(DynamicsCase c, const GridSpec& spec) {
  if (spec.dim != 2)
    throw std::invalid_argument("initial_condition: requires dim = 2");
  const double b = 1.0 / std::pow(std::numbers::pi, 0.25);

  switch (c) {
    case DynamicsCase::I: {
      GridFunction u(spec);
      u.fill_interior([](const std::array<double, 3>& x) {
        return Complex(std::exp(-(x[0] * x[0] + x[1] * x[1])), 0.0);
      });
      return u;
    }
    case DynamicsCase::II: {
      GridFunction u(spec);
      u.fill_interior([](const std::array<double, 3>& x) {
        const Complex z1(x[0] - 0.5, x[1]), z2(x[0] + 0.5, x[1]);
        return z1 * z2 * std::exp(-(x[0] * x[0] + x[1] * x[1]));
      });
      return u;
    }
    case DynamicsCase::III: {
      GridFunction u(spec);
      u.fill_interior([](const std::array<double, 3>& x) {
        const Complex z1(x[0] - 0.5, x[1]), z2(x[0] + 0.5, -x[1]);
        return z1 * z2 * std::exp(-(x[0] * x[0] + x[1] * x[1]));
      });
      return u;
    }
    case DynamicsCase::IV: {
      TwoGaussonParams p;
      p.b1 = p.b2 = b;
      p.x1 = {-2.0, 0.0};
      p.x2 = {2.0, 0.0};
      p.lambda = -1.0;
      return two_gausson_on_grid(p, spec);
    }
    case DynamicsCase::V: {
      TwoGaussonParams p;
      p.b1 = b;
      p.b2 = b / 1.5;
      p.v1 = {-0.15, 0.0};
      p.x1 = {0.0, 0.0};
      p.x2 = {5.0, 0.0};
      p.lambda = -1.0;
      return two_gausson_on_grid(p, spec);
    }
    case DynamicsCase::VI: {
      TwoGaussonParams p;
      p.b1 = p.b2 = b;
      p.v2 = {0.0, 0.85};
      p.x1 = {-2.0, 0.0};
      p.x2 = {2.0, 0.0};
      p.lambda = -1.0;
      return two_gausson_on_grid(p, spec);
    }
  }
  throw std::invalid_argument("initial_condition: unknown case");
}

}  // namespace logse
