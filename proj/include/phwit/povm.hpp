#pragma once

#include <array>
#include <vector>

#include "phwit/complex_matrix.hpp"

namespace phwit {

/// Complete set of positive operators summing to identity.
struct PovmSet {
  int dim = 0;                    // 2 (four elements) or 3 (nine elements)
  std::vector<Matrix> elements;
};

/// Dual operators G_i of an informationally complete POVM:
/// O = sum_i tr(G_i O) F_i for every Hermitian O.
struct DualFrame {
  int dim = 0;
  std::vector<Matrix> duals;
};

/// F_i^T = id_coeff * I + partner_coeff * F_partner (qubit tetrahedron only).
struct TransposeRelation {
  int index = 0;
  double id_coeff = 0.0;
  double partner_coeff = 0.0;
  int partner = 0;
};

const std::array<Matrix, 3>& pauli_matrices();
const std::array<Matrix, 8>& gell_mann_matrices();

/// Tetrahedron directions (1,1,1)/sqrt3, (1,-1,-1)/sqrt3, (-1,1,-1)/sqrt3,
/// (-1,-1,1)/sqrt3.
const std::array<std::array<double, 3>, 4>& tetrahedron_vectors();

/// Nine unit vertices of a regular 8-simplex in the Gell-Mann Bloch space;
/// pairwise dot product -1/8, zero sum.
const std::array<std::array<double, 8>, 9>& simplex_vectors();

/// Four elements (1 + n_i . sigma)/4.
PovmSet qubit_tetrahedron();

/// Nine elements (1/9)(1 + (sqrt3/2) v_i . lambda).
PovmSet qutrit_simplex();

/// Conjugate every element by a unitary.
PovmSet rotate(const PovmSet& povm, const Matrix& u);

/// Dual frame via the Gram system tr(F_i F_j); throws if the POVM is not
/// informationally complete (singular Gram matrix).
DualFrame dual_frame(const PovmSet& povm);

/// The closed transpose relations F_1^T = I/2 - F_3, F_2^T = I/2 - F_4,
/// F_3^T = I/2 - F_1, F_4^T = I/2 - F_2.  Qubit tetrahedron only; the
/// qutrit simplex has no such closed relation here and throws.
std::vector<TransposeRelation> partial_transpose_map(const PovmSet& povm);

}  // namespace phwit
