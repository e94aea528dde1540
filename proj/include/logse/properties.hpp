#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "logse/nonlinearity.hpp"

namespace logse {

struct PropertyResult {
  std::string name;
  bool passed = true;
  long samples = 0;
  long violations = 0;
  double worst_margin =
      std::numeric_limits<double>::infinity();  // smallest bound - quantity
  std::string witness;        // first counterexample, empty when passed
};

using ScalarMap = std::function<Complex(Complex)>;

/// Pointwise lemma inequalities for the logarithmic nonlinearity:
/// log-Lipschitz, Hoelder (alpha = 1/2), imaginary-part bound,
/// sup|f - f_eps| <= eps, regularized Lipschitz, and continuity at 0.
/// The map under test defaults to f_log; tests may inject a broken one.
std::vector<PropertyResult> run_nonlinearity_properties(
    std::uint64_t seed, long n_samples, const ScalarMap& f = f_log);

/// Grid-level inequalities on random fields: summation by parts, the
/// L^{2 alpha} embedding, and the two discrete Sobolev bounds.
std::vector<PropertyResult> run_grid_properties(std::uint64_t seed,
                                                long n_fields);

/// Spectral solver versus dense LU on every grid with at most
/// `max_interior` interior nodes; n_cases random (sigma, b) pairs total.
std::vector<PropertyResult> run_solver_oracle(std::uint64_t seed, int n_cases,
                                              std::size_t max_interior = 512,
                                              double tol = 1e-10);

/// Random grid function with values uniform in the complex disk of the
/// given radius; zero boundary.
GridFunction random_grid_function(const GridSpec& spec, std::uint64_t seed,
                                  double radius = 2.0);

/// Dense direct solve of (sigma I + lap) w = b, the independent oracle.
GridFunction dense_solve_shifted_laplacian(Complex sigma,
                                           const GridFunction& b);

}  // namespace logse
