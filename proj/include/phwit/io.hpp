#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "phwit/optimize.hpp"
#include "phwit/sampler.hpp"
#include "phwit/states.hpp"
#include "phwit/witness.hpp"

namespace phwit {

/// Malformed input (bad JSON, wrong schema, unparsable numbers).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally valid input violating a domain invariant (non-PSD state,
/// trace != 1, ...).
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable paths.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// State schema: {"dims": [dA, dB], "matrix": [[{"re": f, "im": f}, ...], ...]},
/// row-major.
nlohmann::json state_to_json(const DensityMatrix& state);
DensityMatrix state_from_json(const nlohmann::json& j);

DensityMatrix load_state(const std::string& path);
void save_state(const DensityMatrix& state, const std::string& path);

nlohmann::json matrix_to_json(const Matrix& m);

nlohmann::json report_to_json(const WitnessReport& report);
nlohmann::json estimate_to_json(const EstimateReport& report, std::uint64_t seed);

/// Optimizer config schema (every key optional, unknown keys rejected):
/// {"restarts": n, "max_iters": n, "tol": f, "simplex_edge": f,
///  "seed": n, "parallel": b}
OptimizerConfig optimizer_config_from_json(const nlohmann::json& j);
OptimizerConfig load_optimizer_config(const std::string& path);

/// ShotRecord CSV: header "i,j,count", one row per cell.
void write_shot_csv(const ShotRecord& record, const std::string& path);
std::string shot_csv_string(const ShotRecord& record);

/// Format with 12 significant digits (CSV convention).
std::string format_sig12(double x);

}  // namespace phwit
