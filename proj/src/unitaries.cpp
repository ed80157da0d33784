#include "phwit/unitaries.hpp"

#include <cmath>

#include "phwit/linalg.hpp"
#include "phwit/povm.hpp"

namespace phwit {

Matrix su2(const Su2Params& params) {
  const double half = 0.5 * params.theta;
  const double c = std::cos(half), s = std::sin(half);
  const double sum = 0.5 * (params.phi + params.psi);
  const double dif = 0.5 * (params.phi - params.psi);
  Matrix u(2, 2);
  u(0, 0) = std::polar(c, sum);
  u(0, 1) = std::polar(s, dif);
  u(1, 0) = std::polar(-s, -dif);
  u(1, 1) = std::polar(c, -sum);
  return u;
}

Matrix su3(const Su3Params& params) {
  const auto& lambda = gell_mann_matrices();
  Matrix h(3, 3);
  for (int a = 0; a < 8; ++a) h += params.c[a] * lambda[a];
  const EigResult eig = hermitian_eigendecomposition(h);
  Matrix u(3, 3);
  for (int k = 0; k < 3; ++k) {
    const Complex phase = std::polar(1.0, eig.values[k]);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        u(i, j) += phase * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  return u;
}

namespace {
constexpr double kTwoPi = 6.283185307179586476925;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

Su2Params random_su2_params(Rng& rng) {
  Su2Params p;
  p.phi = rng.uniform(0.0, kTwoPi);
  p.theta = rng.uniform(0.0, kTwoPi);
  p.psi = rng.uniform(0.0, kTwoPi);
  return p;
}

Su2Params random_su2_params(std::uint64_t seed) {
  Rng rng(seed);
  return random_su2_params(rng);
}

Su3Params random_su3_params(Rng& rng) {
  Su3Params p;
  for (double& c : p.c) c = rng.uniform(-kPi, kPi);
  return p;
}

Su3Params random_su3_params(std::uint64_t seed) {
  Rng rng(seed);
  return random_su3_params(rng);
}

}  // namespace phwit
