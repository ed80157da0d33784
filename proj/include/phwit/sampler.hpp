#pragma once

#include <cstdint>
#include <vector>

#include "phwit/witness.hpp"

namespace phwit {

/// Outcome counts of a finite-shot run over the joint POVM settings.
struct ShotRecord {
  int na = 0;
  int nb = 0;
  std::vector<long long> counts;  // row-major, na x nb
  long long shots = 0;

  long long at(int i, int j) const { return counts[static_cast<size_t>(i) * nb + j]; }
};

struct EstimateReport {
  double i_ph_hat = 0.0;
  double std_error = 0.0;
  long long shots = 0;
  int bootstrap_resamples = 0;
};

/// Multinomial draw over the flattened table (inverse-CDF per shot on the
/// counter RNG stream). Tiny negative roundoff entries are clamped to zero
/// and the distribution renormalized. Deterministic per seed.
ShotRecord sample_shots(const JointProbabilityTable& table, long long shots,
                        std::uint64_t seed);

/// Empirical frequency table of a record (exactly counts / shots).
JointProbabilityTable frequency_table(const ShotRecord& record);

/// Plug-in estimate of I_PH from empirical frequencies, with a
/// nonparametric bootstrap standard error (seeded independently of the
/// record; resample r uses stream fork(seed, r)).
EstimateReport estimate_i_ph(const ShotRecord& record, int bootstrap_resamples = 500,
                             std::uint64_t seed = 1);

}  // namespace phwit
