#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "phwit/linalg.hpp"
#include "phwit/states.hpp"

namespace phwit {

/// Joint outcome probabilities P_ij of the rotated product POVM, with
/// marginals. (4,4) for two qubits, (4,9) for qubit-qutrit.
struct JointProbabilityTable {
  int na = 0;
  int nb = 0;
  std::vector<double> p;   // row-major, na x nb
  std::vector<double> pa;  // row sums
  std::vector<double> pb;  // column sums

  double at(int i, int j) const { return p[static_cast<size_t>(i) * nb + j]; }
  double sum() const;
};

struct YTriple {
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;
};

/// Coefficients of the quadratic a t^2 + b t + c whose discriminant is
/// 4 (y1^2 + y2^2 - y3^2).
struct QuadraticCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

struct WitnessOperators {
  std::array<Matrix, 3> xhat;
  std::array<Matrix, 3> yhat;  // yhat[k] = xhat[k]^(T_B)
};

/// P_ij = tr[rho (U F_i U^dag) (x) (V F_j V^dag)].
JointProbabilityTable joint_probabilities(const DensityMatrix& rho, const Matrix& u,
                                          const Matrix& v);

/// The linear combinations of joint probabilities behind the witness.
/// For (4,4) tables:
///   Y1 = 6 (P11+P22+P33+P44 - P14-P41-P23-P32)
///   Y2 = sqrt3 (P1A+P4A-P2A-P3A + P1B+P4B-P2B-P3B)
///   Y3 = 1 + 3 (P11+P22+P33+P44+P14+P41+P23+P32 - all eight remaining)
/// For (4,9) tables the coefficients come from the dual-frame expansion of
/// the same operators.
YTriple y_from_probabilities(const JointProbabilityTable& table);

/// The witness operators for the given dimensions (cached, immutable).
const WitnessOperators& y_operators(const BipartiteDims& dims);

/// Y_i = tr[rho (U x V) yhat_i (U x V)^dag]; must agree with the
/// probability path within 1e-10.
YTriple y_operator_path(const DensityMatrix& rho, const Matrix& u, const Matrix& v);

/// X_i = tr[rho (U x V) xhat_i (U x V)^dag] (used by the positivity lemma).
YTriple x_operator_path(const DensityMatrix& rho, const Matrix& u, const Matrix& v);

/// I_PH at one setting: y1^2 + y2^2 - y3^2. Nonpositive for separable states.
double i_ph(const DensityMatrix& rho, const Matrix& u, const Matrix& v);

double i_ph(const YTriple& y);

QuadraticCoeffs quadratic_coeffs(const DensityMatrix& rho, const Matrix& u, const Matrix& v);

/// Maximal CHSH value 2 sqrt(m1 + m2), with m1, m2 the two largest
/// eigenvalues of T^t T, T_kl = tr[rho sigma_k (x) sigma_l]. Two qubits only.
double chsh_max(const DensityMatrix& rho);

/// P_E = max(0, i_ph_max / 4).
double degree_of_entanglement(double i_ph_max);

struct WitnessReport {
  double i_ph_max = 0.0;
  YTriple y;                         // at the optimal setting
  std::vector<double> u_params;
  std::vector<double> v_params;
  Matrix u_matrix;
  Matrix v_matrix;
  double ppt_min_eig = 0.0;
  std::optional<double> chsh_max;    // absent for qubit-qutrit
  std::optional<double> concurrence; // absent for qubit-qutrit
  double p_e = 0.0;
  int restarts_used = 0;
  std::uint64_t seed = 0;
};

}  // namespace phwit
