// Timing comparison of the OpenMP kernels against the single-threaded
// reference implementations, plus a size-scaling table for the fast
// shifted-Laplacian solve. Run with different LOGSE_THREADS / OMP_NUM_THREADS
// to see the parallel speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "logse/analytic.hpp"
#include "logse/nonlinearity.hpp"
#include "logse/serial_ref.hpp"
#include "logse/sine_spectral.hpp"

using namespace logse;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  if (const char* env = std::getenv("LOGSE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
  std::printf("threads: %d\n\n", omp_get_max_threads());

  const GridSpec spec = GridSpec::square(-5.0, 5.0, 512);
  GaussonParams gp;
  gp.omega = 1.0;
  const GridFunction u = exact_on_grid(gp, spec, 0.0);
  const Complex sigma(0.0, 100.0);

  std::printf("kernel comparison on a %d x %d grid (best of 5, seconds)\n",
              spec.cells[0], spec.cells[1]);
  std::printf("%-24s %12s %12s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  struct Row {
    const char* name;
    std::function<void()> serial_fn, parallel_fn;
  };
  const Row rows[] = {
      {"apply_f",
       [&] { volatile auto r = serial::apply_f(u).max_abs(); (void)r; },
       [&] { volatile auto r = apply_f(u).max_abs(); (void)r; }},
      {"discrete_laplacian",
       [&] { volatile auto r = serial::discrete_laplacian(u).max_abs(); (void)r; },
       [&] { volatile auto r = discrete_laplacian(u).max_abs(); (void)r; }},
      {"shifted_laplacian_solve",
       [&] { volatile auto r = serial::solve_shifted_laplacian(sigma, u).max_abs(); (void)r; },
       [&] { volatile auto r = solve_shifted_laplacian(sigma, u).max_abs(); (void)r; }},
  };
  for (const auto& row : rows) {
    const double ts = time_best_of(5, row.serial_fn);
    const double tp = time_best_of(5, row.parallel_fn);
    std::printf("%-24s %12.6f %12.6f %8.2fx\n", row.name, ts, tp, ts / tp);
  }

  std::printf("\nfast solve scaling (1D, best of 5)\n");
  std::printf("%8s %12s %14s\n", "J", "seconds", "sec/(J log J)");
  for (int J : {256, 512, 1024, 2048, 4096, 8192}) {
    const GridSpec g1 = GridSpec::interval(-5.0, 5.0, J);
    GaussonParams g1p;
    g1p.dim = 1;
    const GridFunction b = exact_on_grid(g1p, g1, 0.0);
    ShiftedLaplacianSolver solver(g1);
    const double t = time_best_of(
        5, [&] { volatile auto r = solver.solve(sigma, b).max_abs(); (void)r; });
    std::printf("%8d %12.6f %14.3e\n", J, t, t / (J * std::log2(double(J))));
  }
  return 0;
}
