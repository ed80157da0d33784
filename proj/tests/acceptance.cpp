// Acceptance suite: every criterion prints one PASS/FAIL line and runs at
// its pinned tolerance. Run all with `acceptance`, or a single criterion
// with `acceptance <index>`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "phwit/cli.hpp"
#include "phwit/optimize.hpp"
#include "phwit/parallel.hpp"
#include "phwit/rng.hpp"
#include "phwit/sampler.hpp"
#include "phwit/unitaries.hpp"

using namespace phwit;

namespace {

const double kPi = std::acos(-1.0);
const BipartiteDims kQubits{2, 2};
const BipartiteDims kQubitQutrit{2, 3};

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

OptimizerConfig default_cfg(std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.seed = seed;
  return cfg;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// ---------------------------------------------------------------------------

Outcome criterion_werner_line() {
  Outcome out;
  std::vector<double> diffs(11);
  parallel_for(11, true, [&](int k) {
    const double alpha = k / 10.0;
    OptimizerConfig cfg = default_cfg(Rng(101).fork(k).key());
    cfg.parallel = false;
    const double numeric = maximize_i_ph(werner({kPi / 4.0, alpha}), cfg).best_value;
    diffs[k] = std::abs(numeric - (3.0 * alpha - 1.0) * (1.0 + alpha));
  });
  double worst = 0.0;
  for (double d : diffs) worst = std::max(worst, d);
  out.detail = "max |numeric - (3a-1)(1+a)| = " + fmt(worst);
  if (worst > 1e-3) out.fail("exceeds 1e-3");
  return out;
}

Outcome criterion_fig2_surface() {
  Outcome out;
  const int n = 9;
  std::vector<double> numeric(n * n), formula(n * n);
  parallel_for(n * n, true, [&](int idx) {
    const int i = idx / n, j = idx % n;
    const double theta = kPi * i / (n - 1);
    const double alpha = static_cast<double>(j) / (n - 1);
    OptimizerConfig cfg = default_cfg(Rng(202).fork(idx).key());
    cfg.parallel = false;
    numeric[idx] = maximize_i_ph(werner({theta, alpha}), cfg).best_value;
    formula[idx] = cli::werner_formula(theta, alpha);
  });

  // Per-point closeness, as stated. Where the optimizer lands above the
  // closed form the difference is reported separately: those points carry a
  // certified setting whose I_PH value exceeds the printed surface, so the
  // excess is a property of the surface, not an optimizer artifact.
  double worst_undershoot = 0.0, worst_excess = 0.0;
  int excess_points = 0;
  for (int idx = 0; idx < n * n; ++idx) {
    const double diff = numeric[idx] - formula[idx];
    worst_undershoot = std::max(worst_undershoot, -diff);
    if (diff > 1e-3) {
      ++excess_points;
      worst_excess = std::max(worst_excess, diff);
    }
  }
  out.detail = "max undershoot = " + fmt(worst_undershoot) + ", " + fmt(excess_points) +
               " points exceed the closed form (max excess " + fmt(worst_excess) + ")";
  if (worst_undershoot > 1e-3) out.fail("optimizer below the closed form");
  if (excess_points > 0)
    out.fail("closed form is not the maximum at " + fmt(excess_points) +
             " separable-region points");

  // the numeric maximum must change sign across alpha* = 1/(1+2|sin 2theta|)
  for (int i = 0; i < n; ++i) {
    const double theta = kPi * i / (n - 1);
    const double boundary = 1.0 / (1.0 + 2.0 * std::abs(std::sin(2.0 * theta)));
    for (int j = 0; j < n; ++j) {
      const double alpha = static_cast<double>(j) / (n - 1);
      const double value = numeric[i * n + j];
      if (alpha <= boundary - 0.01 && value >= 0.0)
        out.fail("no negative sign below boundary at theta=" + fmt(theta) +
                 " alpha=" + fmt(alpha));
      if (alpha >= boundary + 0.01 && value <= 0.0)
        out.fail("no positive sign above boundary at theta=" + fmt(theta) +
                 " alpha=" + fmt(alpha));
    }
  }
  return out;
}

Outcome criterion_mems_line() {
  Outcome out;
  std::vector<double> diffs(6);
  parallel_for(6, true, [&](int k) {
    const double gamma = k / 5.0;
    OptimizerConfig cfg = default_cfg(Rng(303).fork(k).key());
    cfg.parallel = false;
    const double numeric = maximize_i_ph(mems({gamma}), cfg).best_value;
    diffs[k] = std::abs(numeric - 4.0 * gamma * gamma);
  });
  double worst = 0.0;
  for (double d : diffs) worst = std::max(worst, d);
  out.detail = "max |numeric - 4g^2| = " + fmt(worst);
  if (worst > 1e-3) out.fail("exceeds 1e-3");
  return out;
}

Outcome criterion_blind_region() {
  Outcome out;
  const DensityMatrix rho = werner({kPi / 4.0, 0.6});
  const double chsh = chsh_max(rho);
  const double expect_chsh = 1.2 * std::sqrt(2.0);
  const double numeric = maximize_i_ph(rho, default_cfg(404)).best_value;
  out.detail = "chsh_max = " + fmt(chsh) + ", i_ph_max = " + fmt(numeric);
  if (std::abs(chsh - expect_chsh) > 1e-9) out.fail("chsh_max != 1.2*2sqrt2/2");
  if (chsh >= 2.0) out.fail("CHSH unexpectedly violated");
  if (std::abs(numeric - 1.28) > 1e-3) out.fail("i_ph_max not 1.28 within 1e-3");
  if (numeric <= 0.0) out.fail("witness missed the entanglement");
  return out;
}

Outcome audit_criterion(const BipartiteDims& dims, int n_random, int n_separable,
                        std::uint64_t seed) {
  Outcome out;
  const cli::AuditSummary random_audit =
      cli::run_audit(dims, n_random, cli::Ensemble::random, seed, default_cfg(seed + 1));
  const int outside = random_audit.n - random_audit.boundary_excluded;
  out.detail = fmt(random_audit.agreements) + "/" + fmt(outside) +
               " agree outside band (band " + fmt(random_audit.boundary_excluded) + ")";
  if (random_audit.agreements != outside) out.fail("sign disagreement with the PPT oracle");
  if (random_audit.false_positives != 0) out.fail("false positive on a PPT state");

  if (n_separable > 0) {
    const cli::AuditSummary sep_audit = cli::run_audit(
        dims, n_separable, cli::Ensemble::separable, seed + 2, default_cfg(seed + 3));
    out.detail += "; separable false positives " + fmt(sep_audit.false_positives);
    if (sep_audit.false_positives != 0) out.fail("separable mixture flagged entangled");
    for (const cli::AuditRecord& rec : sep_audit.records)
      if (rec.i_ph_max > 1e-6) out.fail("separable i_ph_max above 1e-6");
  }
  return out;
}

Outcome criterion_audit_2x2() { return audit_criterion(kQubits, 500, 200, 505); }

Outcome criterion_audit_2x3() { return audit_criterion(kQubitQutrit, 200, 0, 606); }

Outcome criterion_path_equivalence() {
  Outcome out;
  double worst_path = 0.0;
  for (const BipartiteDims& dims : {kQubits, kQubitQutrit}) {
    Rng rng(707 + dims.dim_b);
    for (int trial = 0; trial < 100; ++trial) {
      const DensityMatrix rho = random_state(dims, rng.next_u64());
      const Matrix u = su2(random_su2_params(rng));
      const Matrix v = dims.dim_b == 2 ? su2(random_su2_params(rng))
                                       : su3(random_su3_params(rng));
      const YTriple a = y_from_probabilities(joint_probabilities(rho, u, v));
      const YTriple b = y_operator_path(rho, u, v);
      worst_path = std::max({worst_path, std::abs(a.y1 - b.y1), std::abs(a.y2 - b.y2),
                             std::abs(a.y3 - b.y3)});
    }
  }
  out.detail = "max path discrepancy = " + fmt(worst_path);
  if (worst_path > 1e-10) out.fail("paths differ beyond 1e-10");

  double worst_rebuild = 0.0;
  for (const BipartiteDims& dims : {kQubits, kQubitQutrit}) {
    const WitnessOperators& ops = y_operators(dims);
    for (int k = 0; k < 9; ++k) {
      const double xi = kPi / 4.0 * k / 8.0;
      Matrix built = (std::sin(2.0 * xi) * ops.xhat[0]) -
                     (std::cos(2.0 * xi) * ops.xhat[1]) + ops.xhat[2];
      built *= 0.25;
      worst_rebuild =
          std::max(worst_rebuild, built.max_abs_diff(PureSchmidtState{xi}.projector(dims)));
    }
  }
  out.detail += ", max reconstruction residual = " + fmt(worst_rebuild);
  if (worst_rebuild > 1e-12) out.fail("projector reconstruction beyond 1e-12");
  return out;
}

Outcome criterion_soundness() {
  Outcome out;
  double worst_value = -1e300;
  double worst_a = 1e300;
  for (const BipartiteDims& dims : {kQubits, kQubitQutrit}) {
    const int states = 100;  // 100 per dimension pair, 200 total
    std::vector<double> max_value(states, -1e300), min_a(states, 1e300);
    parallel_for(states, true, [&](int s) {
      Rng rng = Rng(808 + dims.dim_b).fork(s);
      const int terms = 1 + static_cast<int>(rng.next_u64() % 5);
      const DensityMatrix rho = random_separable(dims, terms, rng.next_u64());
      for (int trial = 0; trial < 500; ++trial) {
        const Matrix u = su2(random_su2_params(rng));
        const Matrix v = dims.dim_b == 2 ? su2(random_su2_params(rng))
                                         : su3(random_su3_params(rng));
        const YTriple y = y_from_probabilities(joint_probabilities(rho, u, v));
        max_value[s] = std::max(max_value[s], i_ph(y));
        min_a[s] = std::min(min_a[s], y.y2 + y.y3);
      }
    });
    for (int s = 0; s < states; ++s) {
      worst_value = std::max(worst_value, max_value[s]);
      worst_a = std::min(worst_a, min_a[s]);
    }
  }
  // the leading coefficient must stay nonnegative on entangled states too
  Rng rng(909);
  for (int trial = 0; trial < 40; ++trial) {
    const BipartiteDims dims = trial % 2 == 0 ? kQubits : kQubitQutrit;
    const DensityMatrix rho = random_state(dims, rng.next_u64());
    for (int k = 0; k < 50; ++k) {
      const Matrix u = su2(random_su2_params(rng));
      const Matrix v = dims.dim_b == 2 ? su2(random_su2_params(rng))
                                       : su3(random_su3_params(rng));
      const YTriple y = y_from_probabilities(joint_probabilities(rho, u, v));
      worst_a = std::min(worst_a, y.y2 + y.y3);
    }
  }
  out.detail = "max separable i_ph = " + fmt(worst_value) + ", min a = " + fmt(worst_a);
  if (worst_value > 1e-9) out.fail("separable state above 1e-9");
  if (worst_a < -1e-9) out.fail("leading coefficient below -1e-9");
  return out;
}

Outcome criterion_finite_shot() {
  Outcome out;
  const DensityMatrix bell = werner({kPi / 4.0, 1.0});
  const OptimizationResult opt = maximize_i_ph(bell, default_cfg(1001));
  const auto [u, v] = settings_from_params(kQubits, opt.best_params);
  const JointProbabilityTable table = joint_probabilities(bell, u, v);
  const double truth = i_ph(y_from_probabilities(table));
  if (std::abs(truth - 4.0) > 1e-3) out.fail("optimized settings off the maximum");

  const int seeds = 50;
  std::vector<double> misses(seeds, 0.0);
  parallel_for(seeds, true, [&](int s) {
    const ShotRecord rec = sample_shots(table, 100000, Rng(1100).fork(s).key());
    const EstimateReport rep = estimate_i_ph(rec, 500, Rng(1200).fork(s).key());
    if (std::abs(rep.i_ph_hat - 4.0) > 5.0 * rep.std_error) misses[s] = 1.0;
  });
  int missed = 0;
  for (double m : misses) missed += m > 0.0 ? 1 : 0;
  out.detail = fmt(missed) + "/50 outside five standard errors";
  if (missed != 0) out.fail("estimate outside five bootstrap standard errors");

  std::vector<double> c_of_n;
  for (long long n : {1000LL, 10000LL, 100000LL}) {
    std::vector<double> sq(seeds);
    parallel_for(seeds, true, [&](int s) {
      const ShotRecord rec = sample_shots(table, n, Rng(1300 + n).fork(s).key());
      const double err = estimate_i_ph(rec, 0).i_ph_hat - 4.0;
      sq[s] = err * err;
    });
    double acc = 0.0;
    for (double x : sq) acc += x;
    c_of_n.push_back(std::sqrt(acc / seeds) * std::sqrt(static_cast<double>(n)));
  }
  const auto [lo, hi] = std::minmax_element(c_of_n.begin(), c_of_n.end());
  out.detail += ", RMS*sqrt(N) spread " + fmt(*hi / *lo) + "x";
  if (*hi / *lo > 2.0) out.fail("RMS not within factor 2 of c/sqrt(N)");
  return out;
}

Outcome criterion_pe_monotonicity() {
  Outcome out;
  const int n = 11;
  std::vector<double> pe(n), conc(n);
  double worst = 0.0;
  std::vector<double> diffs(n);
  parallel_for(n, true, [&](int k) {
    const double alpha = k / 10.0;
    const DensityMatrix rho = werner({kPi / 4.0, alpha});
    OptimizerConfig cfg = default_cfg(Rng(1400).fork(k).key());
    cfg.parallel = false;
    pe[k] = degree_of_entanglement(maximize_i_ph(rho, cfg).best_value);
    conc[k] = concurrence(rho);
    const double formula = std::max(0.0, (3.0 * alpha - 1.0) * (1.0 + alpha) / 4.0);
    diffs[k] = std::abs(pe[k] - formula);
  });
  for (double d : diffs) worst = std::max(worst, d);
  out.detail = "max |P_E - formula| = " + fmt(worst);
  if (worst > 2.5e-4) out.fail("P_E misses the closed form beyond 2.5e-4");

  for (int k = 0; k + 1 < n; ++k)
    if (pe[k + 1] < pe[k]) out.fail("P_E decreases at alpha=" + fmt((k + 1) / 10.0));

  // pairwise ordering agreement with concurrence (ties allowed on zeros)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dp = pe[j] - pe[i], dc = conc[j] - conc[i];
      if (dp > 1e-9 && dc < -1e-9) out.fail("ordering conflict with concurrence");
      if (dp < -1e-9 && dc > 1e-9) out.fail("ordering conflict with concurrence");
    }
  return out;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"werner-line regression", 60.0, criterion_werner_line},
      {"werner surface + boundary sign change", 300.0, criterion_fig2_surface},
      {"mems regression", 60.0, criterion_mems_line},
      {"blind region: CHSH silent, witness fires", 60.0, criterion_blind_region},
      {"PPT equivalence audit 2x2", 900.0, criterion_audit_2x2},
      {"PPT equivalence audit 2x3", 1200.0, criterion_audit_2x3},
      {"path equivalence + projector reconstruction", 120.0, criterion_path_equivalence},
      {"separability soundness", 300.0, criterion_soundness},
      {"finite-shot statistics", 300.0, criterion_finite_shot},
      {"P_E monotonicity", 120.0, criterion_pe_monotonicity},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (size_t k = 1; k <= criteria().size(); ++k) selected.push_back(static_cast<int>(k));

  int failures = 0;
  for (int idx : selected) {
    if (idx < 1 || idx > static_cast<int>(criteria().size())) {
      std::printf("FAIL  criterion %d: no such criterion\n", idx);
      ++failures;
      continue;
    }
    const Criterion& c = criteria()[idx - 1];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out = c.run();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.budget_seconds) out.fail("runtime " + fmt(dt) + "s over budget");
    std::printf("%s  criterion %2d: %-42s (%6.1fs)  %s\n", out.pass ? "PASS" : "FAIL", idx,
                c.name, dt, out.detail.c_str());
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
