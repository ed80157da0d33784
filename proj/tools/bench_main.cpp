// Benchmark comparing the serial reference against the OpenMP kernels:
// multistart maximization on a single state, and an audit batch. Both paths
// must produce identical values; timings show the parallel speedup.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "phwit/cli.hpp"
#include "phwit/optimize.hpp"
#include "phwit/parallel.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name,
              serial_s, parallel_s, serial_s / parallel_s,
              identical ? "identical results" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int restarts = 64;
  int audit_states = 24;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--quick") {
      restarts = 16;
      audit_states = 8;
    }
  }
  std::printf("threads: %d\n", phwit::hardware_threads());

  using namespace phwit;

  {
    const DensityMatrix rho = werner({0.7853981633974483, 0.6});
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = 7;
    auto t0 = Clock::now();
    const OptimizationResult serial = maximize_i_ph_serial(rho, cfg);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const OptimizationResult parallel = maximize_i_ph(rho, cfg);
    const double tp = seconds_since(t0);
    report("maximize 2x2 (werner)", ts, tp, serial.best_value == parallel.best_value);
  }

  {
    const DensityMatrix rho = random_state(BipartiteDims(2, 3), 11);
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = 7;
    auto t0 = Clock::now();
    const OptimizationResult serial = maximize_i_ph_serial(rho, cfg);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const OptimizationResult parallel = maximize_i_ph(rho, cfg);
    const double tp = seconds_since(t0);
    report("maximize 2x3 (random)", ts, tp, serial.best_value == parallel.best_value);
  }

  {
    OptimizerConfig cfg;
    cfg.seed = 3;
    auto t0 = Clock::now();
    const cli::AuditSummary serial =
        cli::run_audit(BipartiteDims(2, 2), audit_states, cli::Ensemble::random, 5, cfg,
                       /*parallel=*/false);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const cli::AuditSummary parallel =
        cli::run_audit(BipartiteDims(2, 2), audit_states, cli::Ensemble::random, 5, cfg,
                       /*parallel=*/true);
    const double tp = seconds_since(t0);
    bool same = serial.records.size() == parallel.records.size();
    for (size_t i = 0; same && i < serial.records.size(); ++i)
      same = serial.records[i].i_ph_max == parallel.records[i].i_ph_max;
    report("audit batch 2x2", ts, tp, same);
  }

  return 0;
}
