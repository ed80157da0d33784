#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "phwit/optimize.hpp"
#include "phwit/parallel.hpp"
#include "phwit/sampler.hpp"
#include "phwit/unitaries.hpp"

using namespace phwit;

namespace {

const double kPi = std::acos(-1.0);
const BipartiteDims kQubits{2, 2};

JointProbabilityTable uniform_table() {
  JointProbabilityTable t;
  t.na = t.nb = 4;
  t.p.assign(16, 1.0 / 16.0);
  t.pa.assign(4, 0.25);
  t.pb.assign(4, 0.25);
  return t;
}

/// Optimal Bell-state settings found once by the optimizer.
std::pair<Matrix, Matrix> bell_optimal_settings() {
  static const auto settings = [] {
    OptimizerConfig cfg;
    cfg.seed = 4;
    const DensityMatrix bell = werner({kPi / 4.0, 1.0});
    const OptimizationResult res = maximize_i_ph(bell, cfg);
    REQUIRE(res.best_value == doctest::Approx(4.0).epsilon(1e-4));
    return settings_from_params(kQubits, res.best_params);
  }();
  return settings;
}

}  // namespace

TEST_CASE("degenerate distribution puts every shot in one cell") {
  JointProbabilityTable t = uniform_table();
  t.p.assign(16, 0.0);
  t.p[5] = 1.0;
  const ShotRecord rec = sample_shots(t, 1000, 3);
  CHECK(rec.counts[5] == 1000);
  CHECK(rec.shots == 1000);
}

TEST_CASE("uniform table counts stay within five sigma") {
  const ShotRecord rec = sample_shots(uniform_table(), 16000, 99);
  // per-cell sd = sqrt(N p (1-p)) ~ 30.6
  const double sd = std::sqrt(16000.0 * (1.0 / 16.0) * (15.0 / 16.0));
  long long total = 0;
  for (long long c : rec.counts) {
    CHECK(std::abs(static_cast<double>(c) - 1000.0) <= 5.0 * sd);
    total += c;
  }
  CHECK(total == 16000);
}

TEST_CASE("sampling is deterministic per seed") {
  const ShotRecord a = sample_shots(uniform_table(), 5000, 123);
  const ShotRecord b = sample_shots(uniform_table(), 5000, 123);
  CHECK(a.counts == b.counts);
  const ShotRecord c = sample_shots(uniform_table(), 5000, 124);
  CHECK(a.counts != c.counts);
  CHECK_THROWS_AS(sample_shots(uniform_table(), 0, 1), std::invalid_argument);
}

TEST_CASE("negative roundoff entries are clamped before sampling") {
  JointProbabilityTable t = uniform_table();
  t.p[0] = -1e-13;  // roundoff-scale negative mass
  const ShotRecord rec = sample_shots(t, 100, 5);
  CHECK(rec.shots == 100);
}

TEST_CASE("plug-in estimate of an exact-frequency record equals the table value") {
  const ShotRecord rec = sample_shots(uniform_table(), 1600, 1);
  ShotRecord exact = rec;
  exact.counts.assign(16, 100);  // frequencies exactly 1/16
  const EstimateReport rep = estimate_i_ph(exact, 0);
  CHECK(rep.i_ph_hat == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(rep.std_error == 0.0);
  CHECK_THROWS_AS(estimate_i_ph(ShotRecord{}), std::invalid_argument);
}

TEST_CASE("Bell state at optimal settings: estimate within five standard errors of 4") {
  const auto [u, v] = bell_optimal_settings();
  const DensityMatrix bell = werner({kPi / 4.0, 1.0});
  const JointProbabilityTable table = joint_probabilities(bell, u, v);
  const ShotRecord rec = sample_shots(table, 100000, 2025);
  const EstimateReport rep = estimate_i_ph(rec, 300, 7);
  CHECK(rep.std_error > 0.0);
  CHECK(std::abs(rep.i_ph_hat - 4.0) <= 5.0 * rep.std_error);
}

TEST_CASE("maximally mixed state: estimate within five standard errors of -1") {
  const Matrix id = Matrix::identity(2);
  const JointProbabilityTable table = joint_probabilities(maximally_mixed(kQubits), id, id);
  const ShotRecord rec = sample_shots(table, 10000, 31);
  const EstimateReport rep = estimate_i_ph(rec, 300, 8);
  CHECK(std::abs(rep.i_ph_hat + 1.0) <= 5.0 * rep.std_error);
}

TEST_CASE("RMS error scales as 1/sqrt(N) within a factor of two") {
  const auto [u, v] = bell_optimal_settings();
  const DensityMatrix bell = werner({kPi / 4.0, 1.0});
  const JointProbabilityTable table = joint_probabilities(bell, u, v);
  const int seeds = 50;
  std::vector<double> c_of_n;
  for (long long n : {1000LL, 10000LL, 100000LL}) {
    double sq = 0.0;
    for (int s = 0; s < seeds; ++s) {
      const ShotRecord rec = sample_shots(table, n, 1000 + s);
      const double err = estimate_i_ph(rec, 0).i_ph_hat - 4.0;
      sq += err * err;
    }
    c_of_n.push_back(std::sqrt(sq / seeds) * std::sqrt(static_cast<double>(n)));
  }
  const double lo = *std::min_element(c_of_n.begin(), c_of_n.end());
  const double hi = *std::max_element(c_of_n.begin(), c_of_n.end());
  CHECK(hi / lo <= 2.0);
}

TEST_CASE("plug-in bias at N = 10^4 is within three combined standard errors") {
  const Matrix id = Matrix::identity(2);
  const JointProbabilityTable table = joint_probabilities(maximally_mixed(kQubits), id, id);
  const int seeds = 200;
  std::vector<double> est(seeds);
  parallel_for(seeds, true, [&](int s) {
    est[s] = estimate_i_ph(sample_shots(table, 10000, 5000 + s), 0).i_ph_hat;
  });
  double mean = 0.0;
  for (double e : est) mean += e;
  mean /= seeds;
  double var = 0.0;
  for (double e : est) var += (e - mean) * (e - mean);
  var /= (seeds - 1);
  const double se_mean = std::sqrt(var / seeds);
  CHECK(std::abs(mean - (-1.0)) <= 3.0 * se_mean + 1e-12);
}

TEST_CASE("sampling works for qubit-qutrit tables") {
  Rng rng(61);
  const DensityMatrix rho = random_state(BipartiteDims(2, 3), 12);
  const Matrix u = su2(random_su2_params(rng));
  const Matrix v = su3(random_su3_params(rng));
  const JointProbabilityTable table = joint_probabilities(rho, u, v);
  const ShotRecord rec = sample_shots(table, 20000, 77);
  const double truth = i_ph(y_from_probabilities(table));
  const EstimateReport rep = estimate_i_ph(rec, 200, 9);
  CHECK(std::abs(rep.i_ph_hat - truth) <= 6.0 * rep.std_error + 1e-6);
}
