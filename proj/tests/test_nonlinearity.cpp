#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "logse/nonlinearity.hpp"
#include "logse/properties.hpp"

using namespace logse;

TEST_CASE("f(z) = z ln|z| pointwise values") {
  CHECK(f_log(Complex(0.0, 0.0)) == Complex(0.0, 0.0));
  CHECK(f_log(Complex(1.0, 0.0)) == Complex(0.0, 0.0));
  CHECK(f_log(Complex(std::numbers::e, 0.0)).real() ==
        doctest::Approx(std::numbers::e));
  // |z| = 1 on the circle kills the log regardless of phase
  CHECK(std::abs(f_log(Complex(0.6, 0.8))) < 1e-15);
  // pure imaginary argument
  const Complex z(0.0, 2.0);
  CHECK(f_log(z) == z * std::log(2.0));
}

TEST_CASE("f is finite for denormal and extreme arguments") {
  const Complex tiny(5e-324, 0.0);  // smallest denormal
  CHECK(f_log(tiny) == Complex(0.0, 0.0));
  const Complex near_min(std::numeric_limits<double>::min() / 2.0, 0.0);
  CHECK(f_log(near_min) == Complex(0.0, 0.0));
  const Complex huge(1e300, 1e300);
  const Complex r = f_log(huge);
  CHECK(std::isfinite(r.real()));
  CHECK(std::isfinite(r.imag()));
}

TEST_CASE("regularized nonlinearity") {
  CHECK(f_log_eps(Complex(0.0, 0.0), 0.5) == Complex(0.0, 0.0));
  const Complex z(3.0, -4.0);
  CHECK(f_log_eps(z, 1.0) == z * std::log(6.0));
  CHECK_THROWS_AS(f_log_eps(z, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(f_log_eps(z, -1.0), std::invalid_argument);
}

TEST_CASE("energy density primitive") {
  CHECK(F_primitive(0.0, -1.0) == 0.0);
  // F(rho) = lambda (rho ln rho - rho); at rho = 1: -lambda
  CHECK(F_primitive(1.0, -1.0) == doctest::Approx(1.0));
  CHECK(F_primitive(std::numbers::e, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("LogNonlinearity parameter validation") {
  CHECK_THROWS_AS(LogNonlinearity(0.0), std::invalid_argument);
  CHECK_THROWS_AS(LogNonlinearity(-1.0, -0.5), std::invalid_argument);
  const LogNonlinearity plain(-1.0);
  const LogNonlinearity reg(-1.0, 0.1);
  const Complex z(2.0, 1.0);
  CHECK(plain.f(z) == f_log(z));
  CHECK(reg.f(z) == f_log_eps(z, 0.1));
}

TEST_CASE("apply_f matches the scalar map and keeps the boundary") {
  const GridSpec g = GridSpec::square(-1.0, 1.0, 8);
  const GridFunction u = random_grid_function(g, 5);
  const GridFunction fu = apply_f(u);
  CHECK(fu.boundary_is_zero());
  for (int j = 1; j < 8; ++j)
    for (int k = 1; k < 8; ++k) CHECK(fu.at(j, k) == f_log(u.at(j, k)));
}

TEST_CASE("inequality suite passes for the true nonlinearity") {
  for (const auto& r : run_nonlinearity_properties(99, 20000)) {
    INFO(r.name << " witness: " << r.witness);
    CHECK(r.passed);
    CHECK(r.violations == 0);
  }
}

TEST_CASE("a sign mutation of f is caught with a concrete witness") {
  // conj breaks the imaginary-part bound; the suite must produce a (u,v)
  const ScalarMap broken = [](Complex z) { return std::conj(f_log(z)); };
  const auto results = run_nonlinearity_properties(99, 20000, broken);
  bool imag_failed = false;
  for (const auto& r : results)
    if (r.name == "imaginary_part_bound") {
      imag_failed = !r.passed;
      CHECK(r.violations > 0);
      CHECK(!r.witness.empty());
    }
  CHECK(imag_failed);
}
