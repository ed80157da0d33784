#pragma once

#include <cstdint>

#include "phwit/linalg.hpp"

namespace phwit {

/// Trace-one positive-semidefinite operator on a bipartite space.
/// Construction validates: Hermitian within 1e-10, unit trace within 1e-10,
/// smallest eigenvalue >= -1e-10.
class DensityMatrix {
 public:
  DensityMatrix(BipartiteDims dims, Matrix matrix);

  const BipartiteDims& dims() const { return dims_; }
  const Matrix& matrix() const { return mat_; }

  static constexpr double kHermitianTol = 1e-10;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kPsdTol = -1e-10;

 private:
  BipartiteDims dims_;
  Matrix mat_;
};

/// Two-qubit pure state sin(xi)|00> + cos(xi)|11>; t = tan(xi) is the
/// variable of the quadratic lemma.
struct PureSchmidtState {
  double xi = 0.0;

  double t() const;
  /// Column vector in C^(2*dim_b); |1>_B is the second basis vector.
  Matrix ket(const BipartiteDims& dims) const;
  Matrix projector(const BipartiteDims& dims) const;
};

struct WernerParams {
  double theta = 0.0;  // in [0, pi]
  double alpha = 0.0;  // in [0, 1]
};

struct MemsParams {
  double gamma = 0.0;  // in [0, 1]
  double g() const;    // gamma/2 for gamma >= 2/3, else 1/3
};

/// alpha |psi(theta)><psi(theta)| + (1-alpha) I/4,
/// |psi(theta)> = cos(theta)|00> + sin(theta)|11>.
/// (The Schmidt form above puts sin(xi) on |00>; theta = pi/2 - xi.)
DensityMatrix werner(const WernerParams& params);

/// Maximally entangled mixed state of concurrence gamma.
DensityMatrix mems(const MemsParams& params);

DensityMatrix maximally_mixed(const BipartiteDims& dims);

/// Wootters concurrence; two-qubit states only.
double concurrence(const DensityMatrix& rho);

/// Smallest eigenvalue of rho^(T_B). Negative iff entangled in 2x2 and 2x3.
double ppt_min_eigenvalue(const DensityMatrix& rho);

/// Hilbert-Schmidt random state: G G^dag / tr(G G^dag) for a square complex
/// Gaussian G. Deterministic per seed.
DensityMatrix random_state(const BipartiteDims& dims, std::uint64_t seed);

/// Convex mixture of `terms` random product pure states with flat Dirichlet
/// weights. Separable by construction.
DensityMatrix random_separable(const BipartiteDims& dims, int terms, std::uint64_t seed);

}  // namespace phwit
