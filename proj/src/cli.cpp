#include "phwit/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "phwit/io.hpp"
#include "phwit/parallel.hpp"
#include "phwit/rng.hpp"
#include "phwit/sampler.hpp"

namespace phwit::cli {

using nlohmann::json;

double werner_formula(double theta, double alpha) {
  return ((1.0 + 2.0 * std::abs(std::sin(2.0 * theta))) * alpha - 1.0) * (1.0 + alpha);
}

double mems_formula(double gamma) { return 4.0 * gamma * gamma; }

namespace {

std::vector<double> grid_points(double lo, double hi, int steps) {
  if (lo == hi || steps <= 1) return {lo};
  if (steps < 2) throw std::invalid_argument("sweep: swept parameters need >= 2 steps");
  std::vector<double> pts(steps);
  for (int k = 0; k < steps; ++k) pts[k] = lo + (hi - lo) * k / (steps - 1);
  return pts;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const OptimizerConfig& cfg,
                                bool parallel) {
  const bool is_werner = spec.family == "werner";
  if (!is_werner && spec.family != "mems")
    throw std::invalid_argument("sweep: family must be werner or mems");

  struct Point {
    double theta, alpha;
  };
  std::vector<Point> points;
  if (is_werner) {
    for (double th : grid_points(spec.theta_lo, spec.theta_hi, spec.theta_steps))
      for (double al : grid_points(spec.alpha_lo, spec.alpha_hi, spec.alpha_steps))
        points.push_back({th, al});
  } else {
    for (double g : grid_points(spec.gamma_lo, spec.gamma_hi, spec.gamma_steps))
      points.push_back({0.0, g});
  }
  if (points.empty()) throw std::invalid_argument("sweep: empty grid");

  std::vector<SweepRow> rows(points.size());
  OptimizerConfig point_cfg = cfg;
  point_cfg.parallel = false;  // parallelism lives on the grid loop
  parallel_for(static_cast<int>(points.size()), parallel, [&](int k) {
    const Point& pt = points[k];
    const DensityMatrix rho = is_werner ? werner({pt.theta, pt.alpha})
                                        : mems({pt.alpha});
    OptimizerConfig c = point_cfg;
    c.seed = Rng(cfg.seed).fork(static_cast<std::uint64_t>(k)).key();
    const OptimizationResult opt = maximize_i_ph(rho, c);
    SweepRow& row = rows[k];
    row.theta = pt.theta;
    row.alpha = pt.alpha;
    row.i_ph_max_numeric = opt.best_value;
    row.i_ph_formula = is_werner ? werner_formula(pt.theta, pt.alpha) : mems_formula(pt.alpha);
    row.abs_diff = std::abs(row.i_ph_max_numeric - row.i_ph_formula);
    row.ppt_min_eig = ppt_min_eigenvalue(rho);
    row.chsh = chsh_max(rho);
    row.concurrence = phwit::concurrence(rho);
    row.p_e = degree_of_entanglement(opt.best_value);
  });

  for (size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].i_ph_max_numeric > rows[k].i_ph_formula + 1e-3)
      std::cerr << "warning: sweep point " << k << " exceeds the closed form by "
                << (rows[k].i_ph_max_numeric - rows[k].i_ph_formula) << "\n";
  }
  return rows;
}

std::string sweep_csv(const std::string& family, const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  const bool is_werner = family == "werner";
  out << (is_werner ? "theta,alpha" : "gamma")
      << ",i_ph_max_numeric,i_ph_formula,abs_diff,ppt_min_eig,chsh_max,concurrence,p_e\n";
  for (const SweepRow& r : rows) {
    if (is_werner) out << format_sig12(r.theta) << "," << format_sig12(r.alpha);
    else out << format_sig12(r.alpha);
    out << "," << format_sig12(r.i_ph_max_numeric) << "," << format_sig12(r.i_ph_formula)
        << "," << format_sig12(r.abs_diff) << "," << format_sig12(r.ppt_min_eig) << ","
        << format_sig12(r.chsh) << "," << format_sig12(r.concurrence) << ","
        << format_sig12(r.p_e) << "\n";
  }
  return out.str();
}

AuditSummary run_audit(const BipartiteDims& dims, int n_states, Ensemble ensemble,
                       std::uint64_t seed, const OptimizerConfig& cfg, bool parallel) {
  if (n_states < 1) throw std::invalid_argument("audit: n_states must be >= 1");
  AuditSummary summary;
  summary.n = n_states;
  summary.records.resize(n_states);

  const Rng master(seed);
  OptimizerConfig state_cfg = cfg;
  state_cfg.parallel = false;
  parallel_for(n_states, parallel, [&](int i) {
    const std::uint64_t id = static_cast<std::uint64_t>(i);
    const std::uint64_t state_seed = master.fork(3 * id).key();
    DensityMatrix rho = [&] {
      if (ensemble == Ensemble::random) return random_state(dims, state_seed);
      Rng terms_rng = master.fork(3 * id + 1);
      const int terms = 1 + static_cast<int>(terms_rng.next_u64() % 6);
      return random_separable(dims, terms, state_seed);
    }();
    OptimizerConfig c = state_cfg;
    c.seed = master.fork(3 * id + 2).key();
    AuditRecord& rec = summary.records[i];
    rec.ppt_min_eig = ppt_min_eigenvalue(rho);
    rec.i_ph_max = maximize_i_ph(rho, c).best_value;
    rec.in_band = std::abs(rec.ppt_min_eig) < 1e-3;
    rec.agree = !rec.in_band && ((rec.ppt_min_eig < 0.0) == (rec.i_ph_max > 0.0));
  });

  for (const AuditRecord& rec : summary.records) {
    if (rec.in_band) ++summary.boundary_excluded;
    else if (rec.agree) ++summary.agreements;
    if (rec.i_ph_max > 1e-6 && rec.ppt_min_eig >= 0.0) ++summary.false_positives;
  }
  return summary;
}

namespace {

std::vector<double> parse_param_list(const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("cannot parse number '" + tok + "'");
    }
  }
  return out;
}

std::pair<double, double> parse_range(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("range must be lo:hi, got '" + text + "'");
  try {
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ParseError("cannot parse range '" + text + "'");
  }
}

BipartiteDims parse_dims(const std::string& text) {
  if (text == "2x2") return BipartiteDims(2, 2);
  if (text == "2x3") return BipartiteDims(2, 3);
  throw ParseError("dims must be 2x2 or 2x3, got '" + text + "'");
}

std::pair<Matrix, Matrix> settings_from_flags(const BipartiteDims& dims,
                                              std::vector<double> u_params,
                                              std::vector<double> v_params) {
  if (u_params.empty()) u_params.assign(3, 0.0);
  if (v_params.empty()) v_params.assign(dims.dim_b == 2 ? 3 : 8, 0.0);
  if (u_params.size() != 3)
    throw ParseError("--u-params needs 3 comma-separated angles");
  const size_t want_v = dims.dim_b == 2 ? 3 : 8;
  if (v_params.size() != want_v)
    throw ParseError("--v-params needs " + std::to_string(want_v) + " entries for these dims");
  std::vector<double> all = u_params;
  all.insert(all.end(), v_params.begin(), v_params.end());
  return settings_from_params(dims, all);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

WitnessReport point_report(const DensityMatrix& rho, const Matrix& u, const Matrix& v,
                           const std::vector<double>& u_params,
                           const std::vector<double>& v_params) {
  WitnessReport rep;
  rep.y = y_from_probabilities(joint_probabilities(rho, u, v));
  rep.i_ph_max = i_ph(rep.y);
  rep.u_params = u_params.empty() ? std::vector<double>(3, 0.0) : u_params;
  rep.v_params = v_params.empty()
                     ? std::vector<double>(rho.dims().dim_b == 2 ? 3 : 8, 0.0)
                     : v_params;
  rep.u_matrix = u;
  rep.v_matrix = v;
  rep.ppt_min_eig = ppt_min_eigenvalue(rho);
  if (rho.dims().dim_b == 2) {
    rep.chsh_max = chsh_max(rho);
    rep.concurrence = phwit::concurrence(rho);
  }
  rep.p_e = degree_of_entanglement(rep.i_ph_max);
  rep.restarts_used = 0;
  return rep;
}

json audit_to_json(const BipartiteDims& dims, Ensemble ensemble, const AuditSummary& s) {
  json records = json::array();
  for (const AuditRecord& r : s.records)
    records.push_back({{"ppt_min_eig", r.ppt_min_eig},
                       {"i_ph_max", r.i_ph_max},
                       {"in_band", r.in_band},
                       {"agree", r.agree}});
  return json{{"dims", std::to_string(dims.dim_a) + "x" + std::to_string(dims.dim_b)},
              {"ensemble", ensemble == Ensemble::random ? "random" : "separable"},
              {"n", s.n},
              {"agreements", s.agreements},
              {"boundary_excluded", s.boundary_excluded},
              {"false_positives", s.false_positives},
              {"records", records}};
}

int run_guarded(int argc, const char* const* argv) {
  CLI::App app{"Quadratic PH-inequality entanglement witness toolkit"};
  app.require_subcommand(1);

  std::string state_path, out_path, counts_out, config_path, family = "werner";
  std::string dims_text = "2x2", ensemble_text = "random";
  std::string u_params_text, v_params_text;
  std::string theta_range = "0:3.141592653589793", alpha_range = "0:1", gamma_range = "0:1";
  int steps = 9, restarts = 32, n_states = 100, bootstrap = 500, max_iters = 2000;
  long long shots = 10000;
  std::uint64_t seed = 0;
  double theta = 0.7853981633974483, alpha = 1.0, gamma = 1.0;
  int terms = 3;

  auto add_opt_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed (all commands are deterministic per seed)");
  };
  auto add_opt_optimizer = [&](CLI::App* sub) {
    sub->add_option("--restarts", restarts, "multistart restarts");
    sub->add_option("--max-iters", max_iters, "Nelder-Mead iterations per restart");
    sub->add_option("--config", config_path,
                    "optimizer config JSON; explicit flags override its values");
  };

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate I_PH at fixed settings");
  c_eval->add_option("--state", state_path, "state JSON file")->required();
  c_eval->add_option("--u-params", u_params_text, "3 SU(2) angles, comma separated");
  c_eval->add_option("--v-params", v_params_text, "3 SU(2) angles or 8 SU(3) coefficients");
  add_opt_common(c_eval);

  CLI::App* c_max = app.add_subcommand("maximize", "maximize I_PH over local unitaries");
  c_max->add_option("--state", state_path, "state JSON file")->required();
  add_opt_optimizer(c_max);
  add_opt_common(c_max);

  CLI::App* c_sweep = app.add_subcommand("sweep", "sweep a state family, write CSV");
  c_sweep->add_option("--family", family, "werner or mems");
  c_sweep->add_option("--theta-range", theta_range, "werner theta range lo:hi");
  c_sweep->add_option("--alpha-range", alpha_range, "werner alpha range lo:hi");
  c_sweep->add_option("--gamma-range", gamma_range, "mems gamma range lo:hi");
  c_sweep->add_option("--steps", steps, "grid steps per swept parameter");
  c_sweep->add_option("--out", out_path, "output CSV path")->required();
  add_opt_optimizer(c_sweep);
  add_opt_common(c_sweep);

  CLI::App* c_audit = app.add_subcommand("audit", "compare witness against the PPT oracle");
  c_audit->add_option("--dims", dims_text, "2x2 or 2x3");
  c_audit->add_option("--n-states", n_states, "ensemble size");
  c_audit->add_option("--ensemble", ensemble_text, "random or separable");
  c_audit->add_option("--out", out_path, "also write the JSON to this path");
  add_opt_optimizer(c_audit);
  add_opt_common(c_audit);

  CLI::App* c_sample = app.add_subcommand("sample", "finite-shot estimate of I_PH");
  c_sample->add_option("--state", state_path, "state JSON file")->required();
  c_sample->add_option("--u-params", u_params_text, "3 SU(2) angles");
  c_sample->add_option("--v-params", v_params_text, "3 angles or 8 coefficients");
  c_sample->add_option("--shots", shots, "number of shots");
  c_sample->add_option("--bootstrap", bootstrap, "bootstrap resamples");
  c_sample->add_option("--counts-out", counts_out, "write counts CSV to this path");
  add_opt_common(c_sample);

  CLI::App* c_state = app.add_subcommand("state", "write a state JSON file");
  c_state->add_option("--family", family, "werner, mems, bell, mixed, random or separable");
  c_state->add_option("--theta", theta, "werner theta");
  c_state->add_option("--alpha", alpha, "werner alpha");
  c_state->add_option("--gamma", gamma, "mems gamma");
  c_state->add_option("--dims", dims_text, "dims for random/separable/mixed");
  c_state->add_option("--terms", terms, "product terms for separable");
  c_state->add_option("--out", out_path, "output path")->required();
  add_opt_common(c_state);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  CLI::App* active = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
  const auto flag_given = [&](const std::string& name) {
    const CLI::Option* opt = active ? active->get_option_no_throw(name) : nullptr;
    return opt != nullptr && opt->count() > 0;
  };
  OptimizerConfig cfg;
  if (!config_path.empty()) cfg = load_optimizer_config(config_path);
  if (config_path.empty() || flag_given("--restarts")) cfg.restarts = restarts;
  if (config_path.empty() || flag_given("--max-iters")) cfg.max_iters = max_iters;
  if (config_path.empty() || flag_given("--seed")) cfg.seed = seed;

  if (c_eval->parsed()) {
    const DensityMatrix rho = load_state(state_path);
    const std::vector<double> up = parse_param_list(u_params_text);
    const std::vector<double> vp = parse_param_list(v_params_text);
    const auto [u, v] = settings_from_flags(rho.dims(), up, vp);
    std::cout << report_to_json(point_report(rho, u, v, up, vp)).dump(2) << "\n";
  } else if (c_max->parsed()) {
    const DensityMatrix rho = load_state(state_path);
    const Classification cls = classify(rho, cfg);
    json j = report_to_json(cls.report);
    j["label"] = label_name(cls.label);
    std::cout << j.dump(2) << "\n";
  } else if (c_sweep->parsed()) {
    SweepSpec spec;
    spec.family = family;
    std::tie(spec.theta_lo, spec.theta_hi) = parse_range(theta_range);
    std::tie(spec.alpha_lo, spec.alpha_hi) = parse_range(alpha_range);
    std::tie(spec.gamma_lo, spec.gamma_hi) = parse_range(gamma_range);
    spec.theta_steps = spec.alpha_steps = spec.gamma_steps = steps;
    const std::vector<SweepRow> rows = run_sweep(spec, cfg);
    write_text_file(out_path, sweep_csv(spec.family, rows));
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
  } else if (c_audit->parsed()) {
    const BipartiteDims dims = parse_dims(dims_text);
    Ensemble ensemble;
    if (ensemble_text == "random") ensemble = Ensemble::random;
    else if (ensemble_text == "separable") ensemble = Ensemble::separable;
    else throw ParseError("ensemble must be random or separable");
    const AuditSummary summary = run_audit(dims, n_states, ensemble, seed, cfg);
    const json j = audit_to_json(dims, ensemble, summary);
    if (!out_path.empty()) write_text_file(out_path, j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
  } else if (c_sample->parsed()) {
    const DensityMatrix rho = load_state(state_path);
    const auto [u, v] = settings_from_flags(rho.dims(), parse_param_list(u_params_text),
                                            parse_param_list(v_params_text));
    const JointProbabilityTable table = joint_probabilities(rho, u, v);
    const ShotRecord record = sample_shots(table, shots, seed);
    if (!counts_out.empty()) write_shot_csv(record, counts_out);
    const EstimateReport est = estimate_i_ph(record, bootstrap, Rng(seed).fork(1).key());
    std::cout << estimate_to_json(est, seed).dump(2) << "\n";
  } else if (c_state->parsed()) {
    const BipartiteDims dims = parse_dims(dims_text);
    std::optional<DensityMatrix> rho;
    if (family == "werner") rho = werner({theta, alpha});
    else if (family == "mems") rho = mems({gamma});
    else if (family == "bell") rho = werner({0.7853981633974483, 1.0});
    else if (family == "mixed") rho = maximally_mixed(dims);
    else if (family == "random") rho = random_state(dims, seed);
    else if (family == "separable") rho = random_separable(dims, terms, seed);
    else throw ParseError("unknown family '" + family + "'");
    save_state(*rho, out_path);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  try {
    return run_guarded(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace phwit::cli
