#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "logse/experiment.hpp"

namespace {

constexpr const char* kUsage = R"(usage: logse-lab <command> [--config PATH] [--key value ...]

commands:
  converge-time    temporal refinement study (writes report.csv)
  converge-space   spatial refinement study (writes report.csv)
  truncation       local truncation norms across refinements
  simulate         time integration with series.csv and snapshots
  properties       inequality and oracle suites (writes properties.txt)

keys use section prefixes, e.g. --grid.cells 128 --scheme.name bdf2
--scenario.omega 1 --run.t_final 0.5 --refine.levels 4 --output.dir out
Set LOGSE_THREADS to cap internal parallelism.
)";

void apply_thread_cap() {
  if (const char* env = std::getenv("LOGSE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  const std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::cout << kUsage;
    return args.empty() ? logse::kExitValidation : logse::kExitOk;
  }
  try {
    const logse::ExperimentConfig cfg = logse::parse_cli(args);
    return logse::run_command(cfg, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return logse::kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return logse::kExitDivergence;
  }
}
