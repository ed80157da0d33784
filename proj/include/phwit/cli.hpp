#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phwit/optimize.hpp"

namespace phwit::cli {

/// Parameter sweep over one of the closed-form families.
struct SweepSpec {
  std::string family;  // "werner" or "mems"
  double theta_lo = 0.0, theta_hi = 0.0;
  int theta_steps = 1;
  double alpha_lo = 0.0, alpha_hi = 1.0;
  int alpha_steps = 11;
  double gamma_lo = 0.0, gamma_hi = 1.0;
  int gamma_steps = 6;
};

struct SweepRow {
  double theta = 0.0;  // unused for mems
  double alpha = 0.0;  // gamma for mems
  double i_ph_max_numeric = 0.0;
  double i_ph_formula = 0.0;
  double abs_diff = 0.0;
  double ppt_min_eig = 0.0;
  double chsh = 0.0;
  double concurrence = 0.0;
  double p_e = 0.0;
};

/// Closed-form maxima used as the sweep reference column.
double werner_formula(double theta, double alpha);
double mems_formula(double gamma);

/// Evaluate the sweep grid (rows ordered by grid index). Grid points run
/// concurrently; each point's optimizer runs serially inside.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const OptimizerConfig& cfg,
                                bool parallel = true);

std::string sweep_csv(const std::string& family, const std::vector<SweepRow>& rows);

enum class Ensemble { random, separable };

struct AuditRecord {
  double ppt_min_eig = 0.0;
  double i_ph_max = 0.0;
  bool in_band = false;  // |ppt_min_eig| < 1e-3: excluded from agreement
  bool agree = false;    // sign(i_ph_max) == sign(-ppt_min_eig), outside band
};

struct AuditSummary {
  int n = 0;
  int agreements = 0;
  int boundary_excluded = 0;
  int false_positives = 0;  // separable ensembles: i_ph_max > 1e-6
  std::vector<AuditRecord> records;
};

/// Compare the optimized witness against the PPT oracle on a random
/// ensemble. State i uses stream fork(seed, 3i); separable term counts
/// fork(seed, 3i+1); the optimizer fork(seed, 3i+2).
AuditSummary run_audit(const BipartiteDims& dims, int n_states, Ensemble ensemble,
                       std::uint64_t seed, const OptimizerConfig& cfg,
                       bool parallel = true);

/// Full command-line entry point (subcommands eval, maximize, sweep, audit,
/// sample, state). Exit codes: 0 ok, 2 parse error, 3 invariant violation,
/// 4 I/O error.
int run(int argc, const char* const* argv);

}  // namespace phwit::cli
