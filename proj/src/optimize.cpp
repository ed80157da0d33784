#include "phwit/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "phwit/parallel.hpp"
#include "phwit/rng.hpp"
#include "phwit/unitaries.hpp"

namespace phwit {

NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      const std::vector<double>& x0, double edge,
                                      int max_iters, double tol) {
  const int n = static_cast<int>(x0.size());
  if (n == 0) throw std::invalid_argument("nelder_mead_minimize: empty parameter vector");

  std::vector<std::vector<double>> x(n + 1, x0);
  for (int i = 0; i < n; ++i) x[i + 1][i] += edge;
  std::vector<double> fx(n + 1);
  int evals = 0;
  for (int i = 0; i <= n; ++i) {
    fx[i] = f(x[i]);
    ++evals;
  }

  std::vector<int> idx(n + 1);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> centroid(n), xr(n), xe(n), xk(n);

  for (int it = 0; it < max_iters; ++it) {
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    if (fx[idx[n]] - fx[idx[0]] <= tol) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) centroid[j] += x[idx[i]][j];
    for (int j = 0; j < n; ++j) centroid[j] /= n;

    const std::vector<double>& worst = x[idx[n]];
    for (int j = 0; j < n; ++j) xr[j] = centroid[j] + (centroid[j] - worst[j]);
    const double fr = f(xr);
    ++evals;

    if (fr < fx[idx[0]]) {
      for (int j = 0; j < n; ++j) xe[j] = centroid[j] + 2.0 * (centroid[j] - worst[j]);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        x[idx[n]] = xe;
        fx[idx[n]] = fe;
      } else {
        x[idx[n]] = xr;
        fx[idx[n]] = fr;
      }
    } else if (fr < fx[idx[n - 1]]) {
      x[idx[n]] = xr;
      fx[idx[n]] = fr;
    } else {
      const bool outside = fr < fx[idx[n]];
      const std::vector<double>& base = outside ? xr : worst;
      for (int j = 0; j < n; ++j) xk[j] = centroid[j] + 0.5 * (base[j] - centroid[j]);
      const double fk = f(xk);
      ++evals;
      if (fk < (outside ? fr : fx[idx[n]])) {
        x[idx[n]] = xk;
        fx[idx[n]] = fk;
      } else {
        // shrink toward the best vertex
        for (int i = 1; i <= n; ++i) {
          for (int j = 0; j < n; ++j)
            x[idx[i]][j] = x[idx[0]][j] + 0.5 * (x[idx[i]][j] - x[idx[0]][j]);
          fx[idx[i]] = f(x[idx[i]]);
          ++evals;
        }
      }
    }
  }

  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[a] < fx[b]; });
  return NelderMeadResult{fx[idx[0]], x[idx[0]], evals};
}

std::pair<Matrix, Matrix> settings_from_params(const BipartiteDims& dims,
                                               const std::vector<double>& params) {
  const size_t want = dims.dim_b == 2 ? 6 : 11;
  if (params.size() != want)
    throw std::invalid_argument("settings_from_params: wrong parameter count");
  const Matrix u = su2(Su2Params{params[0], params[1], params[2]});
  if (dims.dim_b == 2) {
    const Matrix v = su2(Su2Params{params[3], params[4], params[5]});
    return {u, v};
  }
  Su3Params vp;
  for (int a = 0; a < 8; ++a) vp.c[a] = params[3 + a];
  return {u, su3(vp)};
}

namespace {

std::vector<double> initial_params(const BipartiteDims& dims, Rng rng) {
  std::vector<double> p;
  const Su2Params ua = random_su2_params(rng);
  p.insert(p.end(), {ua.phi, ua.theta, ua.psi});
  if (dims.dim_b == 2) {
    const Su2Params ub = random_su2_params(rng);
    p.insert(p.end(), {ub.phi, ub.theta, ub.psi});
  } else {
    const Su3Params vb = random_su3_params(rng);
    p.insert(p.end(), vb.c.begin(), vb.c.end());
  }
  return p;
}

OptimizationResult run_multistart(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                  bool parallel) {
  if (cfg.restarts < 1) throw std::invalid_argument("maximize_i_ph: restarts must be >= 1");
  const BipartiteDims dims = rho.dims();
  const auto objective = [&rho, &dims](const std::vector<double>& params) {
    const auto [u, v] = settings_from_params(dims, params);
    return -i_ph(rho, u, v);  // minimize the negation
  };

  std::vector<NelderMeadResult> runs(cfg.restarts);
  const Rng master(cfg.seed);
  parallel_for(cfg.restarts, parallel, [&](int r) {
    const std::vector<double> x0 = initial_params(dims, master.fork(static_cast<std::uint64_t>(r)));
    runs[r] = nelder_mead_minimize(objective, x0, cfg.simplex_edge, cfg.max_iters, cfg.tol);
  });

  OptimizationResult res;
  res.per_restart_values.resize(cfg.restarts);
  for (int r = 0; r < cfg.restarts; ++r) {
    res.per_restart_values[r] = -runs[r].best;
    res.evaluations += runs[r].evaluations;
  }
  res.best_value = *std::max_element(res.per_restart_values.begin(),
                                     res.per_restart_values.end());
  // Stable reporting: the first restart within 1e-12 of the maximum.
  res.best_restart = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    if (res.per_restart_values[r] >= res.best_value - 1e-12) {
      res.best_restart = r;
      break;
    }
  }
  res.best_params = runs[res.best_restart].x;
  return res;
}

}  // namespace

OptimizationResult maximize_i_ph(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  return run_multistart(rho, cfg, cfg.parallel);
}

OptimizationResult maximize_i_ph_serial(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  return run_multistart(rho, cfg, false);
}

const char* label_name(Label label) {
  switch (label) {
    case Label::entangled: return "entangled";
    case Label::separable: return "separable";
    case Label::boundary: return "boundary";
  }
  return "unknown";
}

Classification classify(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  const OptimizationResult opt = maximize_i_ph(rho, cfg);
  Classification out;
  if (opt.best_value > 1e-6)
    out.label = Label::entangled;
  else if (opt.best_value < -1e-6)
    out.label = Label::separable;
  else
    out.label = Label::boundary;

  WitnessReport& rep = out.report;
  rep.i_ph_max = opt.best_value;
  const auto [u, v] = settings_from_params(rho.dims(), opt.best_params);
  rep.y = y_from_probabilities(joint_probabilities(rho, u, v));
  rep.u_params = {opt.best_params.begin(), opt.best_params.begin() + 3};
  rep.v_params = {opt.best_params.begin() + 3, opt.best_params.end()};
  rep.u_matrix = u;
  rep.v_matrix = v;
  rep.ppt_min_eig = ppt_min_eigenvalue(rho);
  if (rho.dims().dim_b == 2) {
    rep.chsh_max = chsh_max(rho);
    rep.concurrence = concurrence(rho);
  }
  rep.p_e = degree_of_entanglement(opt.best_value);
  rep.restarts_used = cfg.restarts;
  rep.seed = cfg.seed;
  return out;
}

}  // namespace phwit
