#pragma once

#include <vector>

#include "phwit/complex_matrix.hpp"

namespace phwit {

/// Bipartite system dimensions. Subsystem A is always a qubit; B is a qubit
/// or a qutrit. The composite index convention is idx = a * dim_b + b
/// (A is the slow index) everywhere in this project.
struct BipartiteDims {
  int dim_a = 2;
  int dim_b = 2;

  BipartiteDims() = default;
  BipartiteDims(int a, int b) : dim_a(a), dim_b(b) {
    if (dim_a != 2 || (dim_b != 2 && dim_b != 3))
      throw std::invalid_argument("BipartiteDims: supported systems are 2x2 and 2x3");
  }

  int total() const { return dim_a * dim_b; }
  bool operator==(const BipartiteDims& o) const {
    return dim_a == o.dim_a && dim_b == o.dim_b;
  }
};

enum class Subsystem { A, B };

/// Kronecker product; (a ⊗ b)[(i p + k), (j q + l)] = a(i,j) b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

/// Transpose the subsystem-B indices only. Trace preserving, involutive.
Matrix partial_transpose(const Matrix& m, const BipartiteDims& dims);

/// Trace out one subsystem; result acts on the kept one.
Matrix partial_trace(const Matrix& m, const BipartiteDims& dims, Subsystem keep);

struct EigResult {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns, matching order
};

/// Cyclic Jacobi eigensolver for complex Hermitian matrices. Input must be
/// Hermitian within 1e-10; it is symmetrized before iterating. Converges
/// when the off-diagonal Frobenius norm drops below 1e-14 (relative to the
/// matrix scale), at most 100 sweeps.
EigResult hermitian_eigendecomposition(const Matrix& m);

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

}  // namespace phwit
