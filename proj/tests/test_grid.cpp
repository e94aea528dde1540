#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "logse/grid.hpp"
#include "logse/properties.hpp"

using namespace logse;

TEST_CASE("GridSpec factories and derived quantities") {
  const GridSpec g = GridSpec::square(-5.0, 5.0, 20);
  CHECK(g.dim == 2);
  CHECK(g.spacing(0) == doctest::Approx(0.5));
  CHECK(g.nodes(0) == 21);
  CHECK(g.coord(0, 0) == doctest::Approx(-5.0));
  CHECK(g.coord(0, 20) == doctest::Approx(5.0));
  CHECK(g.volume() == doctest::Approx(100.0));
  CHECK(g.total_nodes() == 21 * 21);
  CHECK(g.interior_nodes() == 19 * 19);

  const GridSpec g3 = GridSpec::cube(0.0, 1.0, 4);
  CHECK(g3.total_nodes() == 125);
  CHECK(g3.extents() == std::array<int, 3>{5, 5, 5});

  const GridSpec g1 = GridSpec::interval(-1.0, 1.0, 8);
  CHECK(g1.extents() == std::array<int, 3>{9, 1, 1});
}

TEST_CASE("GridSpec validation") {
  CHECK_THROWS_AS(GridSpec::interval(1.0, 1.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::interval(2.0, -2.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::interval(0.0, 1.0, 1), std::invalid_argument);
  const std::array<double, 2> lo{0.0, 0.0}, hi{1.0, 1.0};
  const std::array<int, 2> cells{4, 4};
  CHECK_THROWS_AS(GridSpec::make(0, lo, hi, cells), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::make(4, lo, hi, cells), std::invalid_argument);
}

TEST_CASE("GridFunction boundary stays zero") {
  const GridSpec g = GridSpec::square(-1.0, 1.0, 6);
  GridFunction u(g);
  u.fill_interior([](const std::array<double, 3>& x) {
    return Complex(x[0] + 1.0, x[1] - 2.0);
  });
  CHECK(u.boundary_is_zero());
  CHECK(u.at(0, 3) == Complex(0.0, 0.0));
  CHECK(u.at(3, 6) == Complex(0.0, 0.0));
  CHECK(u.at(3, 3) != Complex(0.0, 0.0));

  u.at(0, 2) = Complex(1.0, 0.0);
  CHECK_FALSE(u.boundary_is_zero());
  u.zero_boundary();
  CHECK(u.boundary_is_zero());
}

TEST_CASE("second difference of a quadratic is exact") {
  // delta^2 recovers the second derivative of x^2 exactly (value 2)
  const GridSpec g = GridSpec::interval(-1.0, 1.0, 10);
  GridFunction u(g);
  u.fill_interior(
      [](const std::array<double, 3>& x) { return Complex(x[0] * x[0], 0.0); });
  const GridFunction d = second_difference(u, 0);
  // away from the boundary, where the zero boundary values do not leak in
  for (int j = 2; j <= 8; ++j)
    CHECK(d.at(j).real() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("discrete laplacian on an eigenvector has the known eigenvalue") {
  const int J = 16;
  const GridSpec g = GridSpec::interval(0.0, 1.0, J);
  const double h = g.spacing(0);
  const int k = 3;
  GridFunction v(g);
  v.fill_interior([&](const std::array<double, 3>& x) {
    return Complex(std::sin(k * std::numbers::pi * x[0]), 0.0);
  });
  const double lam =
      -4.0 / (h * h) * std::pow(std::sin(k * std::numbers::pi / (2.0 * J)), 2);
  const GridFunction d = discrete_laplacian(v);
  for (int j = 1; j < J; ++j)
    CHECK(d.at(j).real() == doctest::Approx(lam * v.at(j).real()).epsilon(1e-10));
}

TEST_CASE("norms on a constant-magnitude interior field") {
  const GridSpec g = GridSpec::square(0.0, 1.0, 4);
  GridFunction u(g);
  u.fill_interior([](const std::array<double, 3>&) { return Complex(3.0, 4.0); });
  // 9 interior nodes, h = 1/4: ||u||^2 = (1/16) * 9 * 25
  CHECK(norm_l2(u) == doctest::Approx(std::sqrt(9.0 * 25.0 / 16.0)));
  CHECK(norm_linf(u) == doctest::Approx(5.0));
  CHECK(norm_lr(u, 2.0) == doctest::Approx(norm_l2(u)));
  CHECK_THROWS_AS(norm_lr(u, 0.0), std::invalid_argument);
}

TEST_CASE("inner product and lincomb") {
  const GridSpec g = GridSpec::interval(0.0, 1.0, 8);
  const GridFunction u = random_grid_function(g, 7);
  const GridFunction v = random_grid_function(g, 8);
  const Complex uv = inner_product(u, v);
  CHECK(inner_product(v, u) == std::conj(uv));
  const GridFunction w = lincomb(2.0, u, Complex(0.0, 1.0), v);
  CHECK(w.at(3) == 2.0 * u.at(3) + Complex(0.0, 1.0) * v.at(3));

  const GridFunction other = random_grid_function(GridSpec::interval(0.0, 1.0, 4), 9);
  CHECK_THROWS_AS(inner_product(u, other), std::invalid_argument);
}

TEST_CASE("summation by parts links the laplacian to forward differences") {
  for (int dim = 1; dim <= 3; ++dim) {
    const GridSpec g = dim == 1   ? GridSpec::interval(-2.0, 1.0, 12)
                       : dim == 2 ? GridSpec::square(-1.0, 1.0, 9)
                                  : GridSpec::cube(0.0, 1.0, 5);
    const GridFunction u = random_grid_function(g, 100 + dim);
    const GridFunction v = random_grid_function(g, 200 + dim);
    const Complex lhs = inner_product(discrete_laplacian(u), v);
    Complex rhs{};
    for (int a = 0; a < dim; ++a)
      rhs -= staggered_inner_product(forward_difference(u, a),
                                     forward_difference(v, a), g);
    CHECK(std::abs(lhs - rhs) < 1e-11 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("seminorm identity |u|_1^2 = -(lap u, u)") {
  const GridSpec g = GridSpec::square(-1.0, 2.0, 11);
  const GridFunction u = random_grid_function(g, 42);
  const double s = seminorm_h1(u);
  const Complex q = inner_product(discrete_laplacian(u), u);
  CHECK(s * s == doctest::Approx(-q.real()).epsilon(1e-10));
  CHECK(std::abs(q.imag()) < 1e-10 * s * s);
}

TEST_CASE("grid property suite passes on random fields") {
  for (const auto& r : run_grid_properties(1234, 500)) {
    INFO(r.name << " witness: " << r.witness);
    CHECK(r.passed);
    CHECK(r.violations == 0);
  }
}
