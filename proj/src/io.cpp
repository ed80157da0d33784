#include "phwit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace phwit {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back({{"re", m(i, j).real()}, {"im", m(i, j).imag()}});
    rows.push_back(std::move(row));
  }
  return rows;
}

json state_to_json(const DensityMatrix& state) {
  return json{{"dims", {state.dims().dim_a, state.dims().dim_b}},
              {"matrix", matrix_to_json(state.matrix())}};
}

namespace {

Matrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix: expected a non-empty array");
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(rows[0].is_array() ? rows[0].size() : 0);
  if (nc == 0) throw ParseError("matrix: expected non-empty rows");
  Matrix m(nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != nc)
      throw ParseError("matrix: ragged rows");
    for (int j = 0; j < nc; ++j) {
      const json& cell = rows[i][j];
      if (!cell.is_object() || !cell.contains("re") || !cell.contains("im") ||
          !cell["re"].is_number() || !cell["im"].is_number())
        throw ParseError("matrix: entries must be {\"re\": f, \"im\": f}");
      m(i, j) = Complex(cell["re"].get<double>(), cell["im"].get<double>());
    }
  }
  return m;
}

}  // namespace

DensityMatrix state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix"))
    throw ParseError("state: expected {\"dims\", \"matrix\"}");
  const json& d = j["dims"];
  if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
    throw ParseError("state: dims must be [dA, dB]");
  BipartiteDims dims;
  try {
    dims = BipartiteDims(d[0].get<int>(), d[1].get<int>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  const Matrix m = matrix_from_json(j["matrix"]);
  try {
    return DensityMatrix(dims, m);
  } catch (const std::invalid_argument& e) {
    throw InvariantError(e.what());
  }
}

DensityMatrix load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return state_from_json(j);
}

void save_state(const DensityMatrix& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << state_to_json(state).dump(2) << "\n";
}

json report_to_json(const WitnessReport& report) {
  json j{{"i_ph_max", report.i_ph_max},
         {"y", {report.y.y1, report.y.y2, report.y.y3}},
         {"u_params", report.u_params},
         {"v_params", report.v_params},
         {"u_matrix", matrix_to_json(report.u_matrix)},
         {"v_matrix", matrix_to_json(report.v_matrix)},
         {"ppt_min_eig", report.ppt_min_eig},
         {"p_e", report.p_e},
         {"restarts_used", report.restarts_used},
         {"seed", report.seed}};
  if (report.chsh_max) j["chsh_max"] = *report.chsh_max;
  if (report.concurrence) j["concurrence"] = *report.concurrence;
  return j;
}

OptimizerConfig optimizer_config_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("optimizer config: expected an object");
  OptimizerConfig cfg;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "restarts") cfg.restarts = value.get<int>();
      else if (key == "max_iters") cfg.max_iters = value.get<int>();
      else if (key == "tol") cfg.tol = value.get<double>();
      else if (key == "simplex_edge") cfg.simplex_edge = value.get<double>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "parallel") cfg.parallel = value.get<bool>();
      else throw ParseError("optimizer config: unknown key '" + key + "'");
    } catch (const json::exception&) {
      throw ParseError("optimizer config: bad value for '" + key + "'");
    }
  }
  if (cfg.restarts < 1) throw InvariantError("optimizer config: restarts must be >= 1");
  if (cfg.max_iters < 1) throw InvariantError("optimizer config: max_iters must be >= 1");
  if (!(cfg.tol > 0.0)) throw InvariantError("optimizer config: tol must be positive");
  return cfg;
}

OptimizerConfig load_optimizer_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return optimizer_config_from_json(j);
}

json estimate_to_json(const EstimateReport& report, std::uint64_t seed) {
  return json{{"i_ph_hat", report.i_ph_hat},
              {"std_error", report.std_error},
              {"shots", report.shots},
              {"bootstrap_resamples", report.bootstrap_resamples},
              {"seed", seed}};
}

std::string shot_csv_string(const ShotRecord& record) {
  std::ostringstream out;
  out << "i,j,count\n";
  for (int i = 0; i < record.na; ++i)
    for (int j = 0; j < record.nb; ++j)
      out << (i + 1) << "," << (j + 1) << "," << record.at(i, j) << "\n";
  return out.str();
}

void write_shot_csv(const ShotRecord& record, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << shot_csv_string(record);
}

std::string format_sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace phwit
