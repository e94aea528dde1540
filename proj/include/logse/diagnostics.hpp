#pragma once

#include <functional>

#include "logse/stepping.hpp"

namespace logse {

/// M = ||u||^2 under the discrete L2 norm.
double mass(const GridFunction& u);

/// E = |u|_1^2 + (F(|u|^2), 1)_h with F(rho) = lambda (rho ln rho - rho).
double energy(const GridFunction& u, double lambda);

struct ErrorNorms {
  double l2 = 0.0;
  double h1 = 0.0;
};

/// Discrete L2 and semi-H1 norms of exact - numeric.
ErrorNorms error_norms(const GridFunction& numeric, const GridFunction& exact);

/// Local truncation error ||xi^n|| of a scheme: the defect obtained by
/// substituting the sampled exact solution into the discrete equations.
/// sample(t) must return the exact grid solution at time t. For BDF2 with
/// n = 0 the starter defect is evaluated.
double truncation_error(Scheme scheme,
                        const std::function<GridFunction(double)>& sample,
                        double tau, int n, double lambda);

struct OrderEstimate {
  std::vector<double> pairwise;  // log2(e_k / e_{k+1})
  double fitted = 0.0;           // least-squares slope on log-log data
  bool warning = false;          // set when errors are non-monotone
};

/// params must be strictly decreasing by factor 2, at least 3 levels.
OrderEstimate estimate_order(std::span<const double> params,
                             std::span<const double> errors);

struct ObservableSeries {
  std::vector<double> times;
  std::vector<double> mass;
  std::vector<double> energy;
  std::vector<double> l2_error;  // optional, empty when unused
  std::vector<double> h1_error;
};

struct ConvergenceReport {
  std::vector<double> params;  // tau or h per level
  std::vector<double> l2;
  std::vector<double> h1;
  OrderEstimate order_l2;
  OrderEstimate order_h1;
};

ConvergenceReport make_report(std::vector<double> params,
                              std::vector<double> l2, std::vector<double> h1);

}  // namespace logse
