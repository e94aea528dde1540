#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "logse/analytic.hpp"
#include "logse/diagnostics.hpp"
#include "logse/serial_ref.hpp"
#include "logse/stepping.hpp"

using namespace logse;

namespace {

SchemeParams params(Scheme s, double tau, int n_steps, double lambda = -1.0) {
  SchemeParams p;
  p.lambda = lambda;
  p.tau = tau;
  p.n_steps = n_steps;
  p.scheme = s;
  return p;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(params(Scheme::Bdf1, 0.0, 10).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(params(Scheme::Bdf1, -0.1, 10).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(params(Scheme::Bdf1, 0.1, -1).validate(),
                  std::invalid_argument);
  SchemeParams p = params(Scheme::Bdf1, 0.1, 5);
  p.lambda = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK(params(Scheme::Bdf2, 0.01, 50).t_final() == doctest::Approx(0.5));
}

TEST_CASE("zero is a fixed point of both schemes") {
  const GridSpec g = GridSpec::square(-2.0, 2.0, 12);
  const GridFunction zero(g);
  const SchemeParams p = params(Scheme::Bdf2, 0.05, 4);
  const GridFunction out = run_simulation(zero, p);
  CHECK(out.max_abs() == 0.0);
}

TEST_CASE("unit-modulus data reduces both schemes to the free equation") {
  // |u| = 1 everywhere kills f, so the update is diagonal in the sine
  // basis with an explicitly known symbol per mode
  const int J = 16;
  const GridSpec g = GridSpec::interval(0.0, 1.0, J);
  GridFunction u(g);
  u.fill_interior([](const std::array<double, 3>& x) {
    const double th = 3.0 * x[0];
    return Complex(std::cos(th), std::sin(th));
  });
  const double tau = 0.02;
  const auto ev = sine_eigenvalues(J, g.spacing(0));

  auto coeffs = [&](const GridFunction& w) {
    std::vector<Complex> line(J - 1);
    for (int j = 1; j < J; ++j) line[j - 1] = w.at(j);
    return serial::dst_forward(line);
  };

  SUBCASE("bdf1 symbol") {
    const GridFunction next = bdf1_step(u, params(Scheme::Bdf1, tau, 1));
    const auto cu = coeffs(u);
    const auto cn = coeffs(next);
    const Complex sigma(0.0, 1.0 / tau);
    for (int k = 0; k < J - 1; ++k) {
      const Complex expected = sigma / (sigma + ev[k]) * cu[k];
      CHECK(std::abs(cn[k] - expected) < 1e-12);
    }
  }

  SUBCASE("bdf2 symbol with equal history") {
    const GridFunction next =
        bdf2_step(u, u, params(Scheme::Bdf2, tau, 1));
    const auto cu = coeffs(u);
    const auto cn = coeffs(next);
    const Complex sigma(0.0, 1.5 / tau);
    for (int k = 0; k < J - 1; ++k) {
      const Complex expected = sigma / (sigma + ev[k]) * cu[k];
      CHECK(std::abs(cn[k] - expected) < 1e-12);
    }
  }
}

TEST_CASE("the BDF2 starter is exactly one BDF1 step") {
  const GridSpec g = GridSpec::square(-5.0, 5.0, 32);
  GaussonParams gp;
  gp.omega = 1.0;
  const GridFunction u0 = exact_on_grid(gp, g, 0.0);
  const SchemeParams p = params(Scheme::Bdf2, 0.01, 1);
  const GridFunction a = bdf2_starter(u0, p);
  const GridFunction b = bdf1_step(u0, p);
  for (std::size_t i = 0; i < a.values().size(); ++i)
    CHECK(a.values()[i] == b.values()[i]);  // bitwise
}

TEST_CASE("halving tau roughly halves the BDF1 error") {
  GaussonParams gp;
  gp.omega = 1.0;
  const GridSpec g = GridSpec::square(-5.0, 5.0, 96);
  const GridFunction u0 = exact_on_grid(gp, g, 0.0);
  const GridFunction exact = exact_on_grid(gp, g, 0.2);
  auto err = [&](double tau) {
    const GridFunction u =
        run_simulation(u0, params(Scheme::Bdf1, tau, int(0.2 / tau + 0.5)));
    return error_norms(u, exact).l2;
  };
  const double e1 = err(0.02), e2 = err(0.01);
  CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.25));
}

TEST_CASE("regression pin: stationary profile is propagated accurately") {
  // omega = 0, lambda = -1: the exact solution does not move; after
  // t = 0.5 at tau = 1e-2, h about 1/16 the L2 error stays small
  GaussonParams gp;  // omega = 0
  const GridSpec g = GridSpec::square(-5.0, 5.0, 160);
  const GridFunction u0 = exact_on_grid(gp, g, 0.0);
  const GridFunction out = run_simulation(u0, params(Scheme::Bdf1, 1e-2, 50));
  const ErrorNorms e = error_norms(out, exact_on_grid(gp, g, 0.5));
  CHECK(e.l2 < 5e-2);
}

TEST_CASE("run_simulation fires hooks at stride boundaries and the end") {
  const GridSpec g = GridSpec::square(-5.0, 5.0, 16);
  GaussonParams gp;
  const GridFunction u0 = exact_on_grid(gp, g, 0.0);
  std::vector<int> steps;
  SimulationHooks hooks;
  hooks.series_stride = 4;
  hooks.on_series = [&](int step, double, const GridFunction&) {
    steps.push_back(step);
  };
  run_simulation(u0, params(Scheme::Bdf2, 0.01, 10), hooks);
  CHECK(steps == std::vector<int>{0, 4, 8, 10});
}

TEST_CASE("residual check accepts healthy steps") {
  const GridSpec g = GridSpec::square(-5.0, 5.0, 48);
  GaussonParams gp;
  gp.omega = 1.0;
  const GridFunction u0 = exact_on_grid(gp, g, 0.0);
  SchemeParams p = params(Scheme::Bdf1, 0.01, 1);
  p.residual_check = true;
  TimeStepper stepper(g, p);
  const GridFunction u1 = stepper.bdf1_step(u0);
  CHECK(stepper.last_residual() <= 1e-9);
  CHECK(u1.is_finite());
}

TEST_CASE("non-finite states raise DivergenceError with the step index") {
  const GridSpec g = GridSpec::square(-1.0, 1.0, 8);
  GridFunction u0(g);
  u0.fill_interior([](const std::array<double, 3>&) {
    return Complex(std::numeric_limits<double>::infinity(), 0.0);
  });
  try {
    run_simulation(u0, params(Scheme::Bdf1, 0.01, 3));
    FAIL("expected DivergenceError");
  } catch (const DivergenceError& e) {
    CHECK(e.step >= 0);
  }
}

TEST_CASE("grid mismatch between history levels is rejected") {
  const GridSpec g = GridSpec::square(-1.0, 1.0, 8);
  const GridSpec other = GridSpec::square(-1.0, 1.0, 10);
  const SchemeParams p = params(Scheme::Bdf2, 0.01, 1);
  TimeStepper stepper(g, p);
  GridFunction u(g), v(other);
  CHECK_THROWS_AS(stepper.bdf2_step(u, v), std::invalid_argument);
}
