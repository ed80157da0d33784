#pragma once

#include <array>
#include <cstdint>

#include "phwit/complex_matrix.hpp"
#include "phwit/rng.hpp"

namespace phwit {

/// ZYZ Euler angles for SU(2).
struct Su2Params {
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;
};

/// Coefficients of the Gell-Mann generators for SU(3).
struct Su3Params {
  std::array<double, 8> c{};
};

/// exp(i phi sigma_z / 2) exp(i theta sigma_y / 2) exp(i psi sigma_z / 2).
Matrix su2(const Su2Params& params);

/// exp(i sum_a c_a lambda_a), via eigendecomposition of the exponent.
Matrix su3(const Su3Params& params);

/// Angles uniform in [0, 2pi).
Su2Params random_su2_params(Rng& rng);
Su2Params random_su2_params(std::uint64_t seed);

/// Components uniform in [-pi, pi].
Su3Params random_su3_params(Rng& rng);
Su3Params random_su3_params(std::uint64_t seed);

}  // namespace phwit
