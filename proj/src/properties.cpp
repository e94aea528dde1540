#include "logse/properties.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "logse/sine_spectral.hpp"

namespace logse {

namespace {

// roundoff guard for mathematically exact inequalities
constexpr double kSlack = 1e-12;

std::string complex_str(Complex z) {
  std::ostringstream os;
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

struct Checker {
  PropertyResult res;
  explicit Checker(std::string name) { res.name = std::move(name); }

  void check(double quantity, double bound, const std::string& witness) {
    ++res.samples;
    const double margin = bound - quantity;
    if (margin < res.worst_margin) res.worst_margin = margin;
    if (quantity > bound * (1.0 + kSlack) + 1e-300) {
      ++res.violations;
      if (res.passed) {
        res.passed = false;
        std::ostringstream os;
        os << witness << " quantity=" << quantity << " bound=" << bound;
        res.witness = os.str();
      }
    }
  }
};

Complex random_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double r = radius * std::sqrt(u01(rng));
  const double th = 2.0 * std::numbers::pi * u01(rng);
  return {r * std::cos(th), r * std::sin(th)};
}

}  // namespace

std::vector<PropertyResult> run_nonlinearity_properties(std::uint64_t seed,
                                                        long n_samples,
                                                        const ScalarMap& f) {
  std::mt19937_64 rng(seed);
  std::vector<PropertyResult> out;

  {  // |f(u)-f(v)| <= (|ln y| + 1)|u - v|, y = max(|u|,|v|) > 0
    Checker c("log_lipschitz");
    for (long i = 0; i < n_samples; ++i) {
      const Complex u = random_disk(rng, 3.0), v = random_disk(rng, 3.0);
      const double y = std::max(std::abs(u), std::abs(v));
      if (y == 0.0) continue;
      c.check(std::abs(f(u) - f(v)),
              (std::abs(std::log(y)) + 1.0) * std::abs(u - v),
              "u=" + complex_str(u) + " v=" + complex_str(v));
    }
    out.push_back(std::move(c.res));
  }

  {  // alpha = 1/2 Hoelder bound on the disk |z| <= e^{-1}
    Checker c("holder_alpha_half");
    const double eps_hat = std::exp(-1.0);
    const double coeff =
        std::sqrt(2.0 * eps_hat) * (std::abs(std::log(eps_hat)) + 1.0);
    for (long i = 0; i < n_samples; ++i) {
      const Complex u = random_disk(rng, eps_hat), v = random_disk(rng, eps_hat);
      c.check(std::abs(f(u) - f(v)), coeff * std::sqrt(std::abs(u - v)),
              "u=" + complex_str(u) + " v=" + complex_str(v));
    }
    out.push_back(std::move(c.res));
  }

  {  // |Im[(f(u)-f(v)) conj(u-v)]| <= |u-v|^2
    Checker c("imaginary_part_bound");
    for (long i = 0; i < n_samples; ++i) {
      const Complex u = random_disk(rng, 3.0), v = random_disk(rng, 3.0);
      const Complex d = u - v;
      c.check(std::abs(std::imag((f(u) - f(v)) * std::conj(d))),
              std::norm(d), "u=" + complex_str(u) + " v=" + complex_str(v));
    }
    out.push_back(std::move(c.res));
  }

  for (double eps : {1e-2, 1e-4}) {  // sup |f - f_eps| <= eps
    std::ostringstream name;
    name << "regularization_gap_eps_" << eps;
    Checker c(name.str());
    for (long i = 0; i < n_samples; ++i) {
      const Complex z = random_disk(rng, 10.0);
      c.check(std::abs(f(z) - f_log_eps(z, eps)), eps, "z=" + complex_str(z));
    }
    out.push_back(std::move(c.res));
  }

  {  // |f_eps(z)-f_eps(w)| <= 2|ln eps||z-w| on |z|,|w| <= c, eps < 1/(2c)
    Checker c("regularized_lipschitz");
    const double cap = 10.0;
    for (double eps : {0.01, 0.04}) {
      const double coeff = 2.0 * std::abs(std::log(eps));
      for (long i = 0; i < n_samples / 2; ++i) {
        const Complex z = random_disk(rng, cap), w = random_disk(rng, cap);
        c.check(std::abs(f_log_eps(z, eps) - f_log_eps(w, eps)),
                coeff * std::abs(z - w),
                "z=" + complex_str(z) + " w=" + complex_str(w));
      }
    }
    out.push_back(std::move(c.res));
  }

  {  // continuity at zero: |f(z)| <= 1e-10 for |z| = 1e-12
    Checker c("continuity_at_zero");
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
      const double th = 2.0 * std::numbers::pi * u01(rng);
      const Complex z = 1e-12 * Complex(std::cos(th), std::sin(th));
      c.check(std::abs(f(z)), 1e-10, "z=" + complex_str(z));
    }
    out.push_back(std::move(c.res));
  }

  return out;
}

GridFunction random_grid_function(const GridSpec& spec, std::uint64_t seed,
                                  double radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-radius, radius);
  GridFunction u(spec);
  const auto e = spec.extents();
  for (int j = 0; j < e[0]; ++j)
    for (int k = 0; k < e[1]; ++k)
      for (int l = 0; l < e[2]; ++l)
        if (u.interior3(j, k, l)) u.at(j, k, l) = Complex(dist(rng), dist(rng));
  return u;
}

std::vector<PropertyResult> run_grid_properties(std::uint64_t seed,
                                                long n_fields) {
  std::vector<PropertyResult> out;
  std::mt19937_64 rng(seed);

  const GridSpec g1 = GridSpec::interval(-1.5, 2.0, 17);
  const GridSpec g2 = GridSpec::make(2, std::array{-1.0, 0.0},
                                     std::array{1.0, 3.0}, std::array{12, 9});

  {  // (delta^2_a u, v)_h = -<delta+_a u, delta+_a v>_h
    Checker c("summation_by_parts");
    for (const GridSpec& g : {g1, g2}) {
      for (int axis = 0; axis < g.dim; ++axis) {
        for (int i = 0; i < 100; ++i) {
          const GridFunction u = random_grid_function(g, rng());
          const GridFunction v = random_grid_function(g, rng());
          const Complex lhs = inner_product(second_difference(u, axis), v);
          const StaggeredField du = forward_difference(u, axis);
          const StaggeredField dv = forward_difference(v, axis);
          const Complex rhs = staggered_inner_product(du, dv, g);
          const double scale =
              1.0 + seminorm_h1(u) * seminorm_h1(v);
          c.check(std::abs(lhs + rhs), 1e-12 * scale,
                  "dim=" + std::to_string(g.dim) +
                      " axis=" + std::to_string(axis));
        }
      }
    }
    out.push_back(std::move(c.res));
  }

  {  // ||u||_{2 alpha} <= |Omega|^{1/(2 alpha) - 1/2} ||u||
    Checker c("l2alpha_embedding");
    for (long i = 0; i < n_fields; ++i) {
      const GridSpec& g = (i % 2 == 0) ? g1 : g2;
      const GridFunction u = random_grid_function(g, rng());
      const double l2 = norm_l2(u);
      for (double alpha : {0.3, 0.5, 0.9}) {
        const double lhs = norm_lr(u, 2.0 * alpha);
        const double bound =
            std::pow(g.volume(), 1.0 / (2.0 * alpha) - 0.5) * l2;
        c.check(lhs, bound, "alpha=" + std::to_string(alpha));
      }
    }
    out.push_back(std::move(c.res));
  }

  {  // ||u||_4 <= ||u||^{1/2} |u|_1^{1/2}
    Checker c("sobolev_l4");
    for (long i = 0; i < n_fields; ++i) {
      const GridSpec& g = (i % 2 == 0) ? g1 : g2;
      const GridFunction u = random_grid_function(g, rng());
      c.check(norm_lr(u, 4.0),
              std::sqrt(norm_l2(u)) * std::sqrt(seminorm_h1(u)), "random u");
    }
    out.push_back(std::move(c.res));
  }

  {  // ||u||_inf / (||u||^{1/2}(|u|_2 + ||u||)^{1/2}) stays bounded as h -> 0
    Checker c("sobolev_linf_ratio_bounded");
    double coarse_max = 0.0;
    for (int level = 0; level < 4; ++level) {
      const int J = 8 << level;
      const GridSpec g = GridSpec::square(-1.0, 1.0, J);
      double level_max = 0.0;
      for (int i = 0; i < 20; ++i) {
        const GridFunction u = random_grid_function(g, rng());
        const double denom =
            std::sqrt(norm_l2(u)) * std::sqrt(seminorm_h2(u) + norm_l2(u));
        level_max = std::max(level_max, norm_linf(u) / denom);
      }
      if (level == 0) coarse_max = level_max;
      c.check(level_max, 2.0 * coarse_max, "J=" + std::to_string(J));
    }
    out.push_back(std::move(c.res));
  }

  return out;
}

GridFunction dense_solve_shifted_laplacian(Complex sigma,
                                           const GridFunction& b) {
  const GridSpec& s = b.spec();
  const std::size_t n = s.interior_nodes();
  std::array<int, 3> m{1, 1, 1};
  for (int a = 0; a < s.dim; ++a) m[a] = s.cells[a] - 1;

  auto flat = [&](int j, int k, int l) {
    return (static_cast<Eigen::Index>(j) * m[1] + k) * m[2] + l;
  };

  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd rhs(n);
  std::array<double, 3> inv_h2{};
  for (int a = 0; a < s.dim; ++a)
    inv_h2[a] = 1.0 / (s.spacing(a) * s.spacing(a));

  for (int j = 0; j < m[0]; ++j)
    for (int k = 0; k < m[1]; ++k)
      for (int l = 0; l < m[2]; ++l) {
        const Eigen::Index r = flat(j, k, l);
        Complex diag = sigma;
        for (int a = 0; a < s.dim; ++a) diag -= 2.0 * inv_h2[a];
        A(r, r) = diag;
        const std::array<int, 3> idx{j, k, l};
        for (int a = 0; a < s.dim; ++a) {
          if (idx[a] > 0) {
            auto nb = idx; nb[a] -= 1;
            A(r, flat(nb[0], nb[1], nb[2])) += inv_h2[a];
          }
          if (idx[a] < m[a] - 1) {
            auto nb = idx; nb[a] += 1;
            A(r, flat(nb[0], nb[1], nb[2])) += inv_h2[a];
          }
        }
        rhs(r) = b.at(j + 1, s.dim > 1 ? k + 1 : 0, s.dim > 2 ? l + 1 : 0);
      }

  const Eigen::VectorXcd w = A.partialPivLu().solve(rhs);

  GridFunction out(s);
  for (int j = 0; j < m[0]; ++j)
    for (int k = 0; k < m[1]; ++k)
      for (int l = 0; l < m[2]; ++l)
        out.at(j + 1, s.dim > 1 ? k + 1 : 0, s.dim > 2 ? l + 1 : 0) =
            w(flat(j, k, l));
  return out;
}

std::vector<PropertyResult> run_solver_oracle(std::uint64_t seed, int n_cases,
                                              std::size_t max_interior,
                                              double tol) {
  std::vector<GridSpec> grids;
  for (int J : {2, 3, 5, 9, 17, 33, 65, 129, 257, 513})
    if (static_cast<std::size_t>(J - 1) <= max_interior)
      grids.push_back(GridSpec::interval(-1.0, 1.0, J));
  for (int J : {2, 3, 5, 9, 17, 23})
    if (static_cast<std::size_t>(J - 1) * (J - 1) <= max_interior)
      grids.push_back(GridSpec::square(-2.0, 2.0, J));
  for (int J : {2, 3, 5, 9})
    if (static_cast<std::size_t>(J - 1) * (J - 1) * (J - 1) <= max_interior)
      grids.push_back(GridSpec::cube(0.0, 1.0, J));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-50.0, 50.0), im(1.0, 200.0);

  Checker c("dense_oracle_equivalence");
  for (int i = 0; i < n_cases; ++i) {
    const GridSpec& g = grids[i % grids.size()];
    const Complex sigma(re(rng), im(rng));
    const GridFunction b = random_grid_function(g, rng());
    const GridFunction fast = solve_shifted_laplacian(sigma, b);
    const GridFunction dense = dense_solve_shifted_laplacian(sigma, b);
    const GridFunction diff = lincomb(1.0, fast, -1.0, dense);
    const double rel = norm_l2(diff) / std::max(1e-300, norm_l2(dense));
    std::ostringstream w;
    w << "dim=" << g.dim << " J=" << g.cells[0] << " sigma=" << sigma;
    c.check(rel, tol, w.str());
  }
  std::vector<PropertyResult> out;
  out.push_back(std::move(c.res));
  return out;
}

}  // namespace logse
