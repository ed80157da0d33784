#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "phwit/states.hpp"
#include "phwit/witness.hpp"

namespace phwit {

struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 2000;        // Nelder-Mead iterations per restart
  double tol = 1e-9;           // simplex value-spread tolerance
  double simplex_edge = 0.3;   // initial simplex edge, radians
  std::uint64_t seed = 0;
  bool parallel = true;        // OpenMP over restarts; results are identical
};

struct OptimizationResult {
  double best_value = 0.0;
  std::vector<double> best_params;
  int best_restart = 0;
  std::vector<double> per_restart_values;
  long evaluations = 0;
};

struct NelderMeadResult {
  double best = 0.0;
  std::vector<double> x;
  int evaluations = 0;
};

/// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2) minimizing f, starting from an axis-aligned simplex of the
/// given edge. Stops when the value spread over the simplex drops below tol.
NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      const std::vector<double>& x0, double edge,
                                      int max_iters, double tol);

/// Maximize i_ph(rho, U(p), V(q)) over local unitary parameters with
/// deterministic multistart: restart r starts from the parameter stream
/// fork(seed, r), so the result is a pure function of the config. Ties
/// across restarts resolve to the lowest restart index within 1e-12.
OptimizationResult maximize_i_ph(const DensityMatrix& rho, const OptimizerConfig& cfg);

/// Serial reference of the same computation (kept for testing; must return
/// bit-identical results).
OptimizationResult maximize_i_ph_serial(const DensityMatrix& rho, const OptimizerConfig& cfg);

enum class Label { entangled, separable, boundary };

const char* label_name(Label label);

struct Classification {
  Label label = Label::separable;
  WitnessReport report;
};

/// i_ph_max > 1e-6 is entangled, below -1e-6 separable, else boundary.
/// The report carries the PPT eigenvalue so disagreements stay visible.
Classification classify(const DensityMatrix& rho, const OptimizerConfig& cfg);

/// Reconstruct the (U, V) pair from a flat parameter vector (6 entries for
/// 2x2, 3 + 8 for 2x3).
std::pair<Matrix, Matrix> settings_from_params(const BipartiteDims& dims,
                                               const std::vector<double>& params);

}  // namespace phwit
