#include "phwit/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "phwit/rng.hpp"

namespace phwit {

namespace {

std::vector<double> cumulative_distribution(const std::vector<double>& p) {
  std::vector<double> clamped(p.size());
  double total = 0.0;
  for (size_t k = 0; k < p.size(); ++k) {
    clamped[k] = std::max(0.0, p[k]);
    total += clamped[k];
  }
  if (total <= 0.0) throw std::invalid_argument("sample_shots: distribution has no mass");
  std::vector<double> cdf(p.size());
  double run = 0.0;
  for (size_t k = 0; k < p.size(); ++k) {
    run += clamped[k] / total;
    cdf[k] = run;
  }
  cdf.back() = 1.0;
  return cdf;
}

std::vector<long long> draw_counts(const std::vector<double>& cdf, long long shots, Rng rng) {
  std::vector<long long> counts(cdf.size(), 0);
  for (long long s = 0; s < shots; ++s) {
    const double u = rng.uniform01();
    const size_t cell =
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    ++counts[std::min(cell, cdf.size() - 1)];
  }
  return counts;
}

}  // namespace

ShotRecord sample_shots(const JointProbabilityTable& table, long long shots,
                        std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_shots: shots must be >= 1");
  ShotRecord rec;
  rec.na = table.na;
  rec.nb = table.nb;
  rec.shots = shots;
  rec.counts = draw_counts(cumulative_distribution(table.p), shots, Rng(seed));
  return rec;
}

JointProbabilityTable frequency_table(const ShotRecord& record) {
  if (record.shots < 1) throw std::invalid_argument("frequency_table: record has zero shots");
  JointProbabilityTable t;
  t.na = record.na;
  t.nb = record.nb;
  t.p.resize(record.counts.size());
  t.pa.assign(record.na, 0.0);
  t.pb.assign(record.nb, 0.0);
  for (int i = 0; i < record.na; ++i)
    for (int j = 0; j < record.nb; ++j) {
      const double f = static_cast<double>(record.at(i, j)) / record.shots;
      t.p[static_cast<size_t>(i) * record.nb + j] = f;
      t.pa[i] += f;
      t.pb[j] += f;
    }
  return t;
}

EstimateReport estimate_i_ph(const ShotRecord& record, int bootstrap_resamples,
                             std::uint64_t seed) {
  if (record.shots < 1) throw std::invalid_argument("estimate_i_ph: record has zero shots");
  if (bootstrap_resamples < 0)
    throw std::invalid_argument("estimate_i_ph: negative resample count");

  EstimateReport rep;
  rep.shots = record.shots;
  rep.bootstrap_resamples = bootstrap_resamples;
  const JointProbabilityTable freq = frequency_table(record);
  rep.i_ph_hat = i_ph(y_from_probabilities(freq));

  if (bootstrap_resamples > 0) {
    const std::vector<double> cdf = cumulative_distribution(freq.p);
    const Rng master(seed);
    double sum = 0.0, sum2 = 0.0;
    for (int r = 0; r < bootstrap_resamples; ++r) {
      ShotRecord boot;
      boot.na = record.na;
      boot.nb = record.nb;
      boot.shots = record.shots;
      boot.counts = draw_counts(cdf, record.shots, master.fork(static_cast<std::uint64_t>(r)));
      const double v = i_ph(y_from_probabilities(frequency_table(boot)));
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / bootstrap_resamples;
    const double var = std::max(0.0, sum2 / bootstrap_resamples - mean * mean);
    rep.std_error = std::sqrt(var);
  }
  return rep;
}

}  // namespace phwit
