#include "phwit/povm.hpp"

#include <cmath>
#include <stdexcept>

namespace phwit {

const std::array<Matrix, 3>& pauli_matrices() {
  static const std::array<Matrix, 3> paulis = [] {
    std::array<Matrix, 3> p{Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
    p[0](0, 1) = 1.0;
    p[0](1, 0) = 1.0;
    p[1](0, 1) = Complex(0.0, -1.0);
    p[1](1, 0) = Complex(0.0, 1.0);
    p[2](0, 0) = 1.0;
    p[2](1, 1) = -1.0;
    return p;
  }();
  return paulis;
}

const std::array<Matrix, 8>& gell_mann_matrices() {
  static const std::array<Matrix, 8> lambdas = [] {
    std::array<Matrix, 8> l{Matrix(3, 3), Matrix(3, 3), Matrix(3, 3), Matrix(3, 3),
                            Matrix(3, 3), Matrix(3, 3), Matrix(3, 3), Matrix(3, 3)};
    l[0](0, 1) = l[0](1, 0) = 1.0;
    l[1](0, 1) = Complex(0.0, -1.0);
    l[1](1, 0) = Complex(0.0, 1.0);
    l[2](0, 0) = 1.0;
    l[2](1, 1) = -1.0;
    l[3](0, 2) = l[3](2, 0) = 1.0;
    l[4](0, 2) = Complex(0.0, -1.0);
    l[4](2, 0) = Complex(0.0, 1.0);
    l[5](1, 2) = l[5](2, 1) = 1.0;
    l[6](1, 2) = Complex(0.0, -1.0);
    l[6](2, 1) = Complex(0.0, 1.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    l[7](0, 0) = r3;
    l[7](1, 1) = r3;
    l[7](2, 2) = -2.0 * r3;
    return l;
  }();
  return lambdas;
}

const std::array<std::array<double, 3>, 4>& tetrahedron_vectors() {
  static const std::array<std::array<double, 3>, 4> n = [] {
    const double r = 1.0 / std::sqrt(3.0);  // 0.5773502691896258
    return std::array<std::array<double, 3>, 4>{{
        {r, r, r}, {r, -r, -r}, {-r, r, -r}, {-r, -r, r}}};
  }();
  return n;
}

const std::array<std::array<double, 8>, 9>& simplex_vectors() {
  // Regular 8-simplex vertices: unit norm, zero sum, pairwise dot -1/8.
  // (Helmert-basis coordinates of the projected R^9 unit vectors.)
  static const std::array<std::array<double, 8>, 9> v{{
      {0.74999999999999989, 0.43301270189221935, 0.30618621784789729,
       0.23717082451262841, 0.19364916731037082, 0.16366341767699427,
       0.14173667737846021, 0.125},
      {-0.74999999999999989, 0.43301270189221935, 0.30618621784789729,
       0.23717082451262841, 0.19364916731037082, 0.16366341767699427,
       0.14173667737846021, 0.125},
      {0.0, -0.86602540378443871, 0.30618621784789729, 0.23717082451262841,
       0.19364916731037082, 0.16366341767699427, 0.14173667737846021, 0.125},
      {0.0, 0.0, -0.91855865354369182, 0.23717082451262841, 0.19364916731037082,
       0.16366341767699427, 0.14173667737846021, 0.125},
      {0.0, 0.0, 0.0, -0.94868329805051366, 0.19364916731037082,
       0.16366341767699427, 0.14173667737846021, 0.125},
      {0.0, 0.0, 0.0, 0.0, -0.96824583655185414, 0.16366341767699427,
       0.14173667737846021, 0.125},
      {0.0, 0.0, 0.0, 0.0, 0.0, -0.98198050606196563, 0.14173667737846021, 0.125},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.99215674164922141, 0.125},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0}}};
  return v;
}

PovmSet qubit_tetrahedron() {
  PovmSet povm;
  povm.dim = 2;
  const auto& sigma = pauli_matrices();
  for (const auto& n : tetrahedron_vectors()) {
    Matrix f = Matrix::identity(2);
    for (int k = 0; k < 3; ++k) f += n[k] * sigma[k];
    povm.elements.push_back(f * 0.25);
  }
  return povm;
}

PovmSet qutrit_simplex() {
  PovmSet povm;
  povm.dim = 3;
  const auto& lambda = gell_mann_matrices();
  const double c = std::sqrt(3.0) / 2.0;
  for (const auto& v : simplex_vectors()) {
    Matrix f = Matrix::identity(3);
    for (int k = 0; k < 8; ++k) f += (c * v[k]) * lambda[k];
    povm.elements.push_back(f * (1.0 / 9.0));
  }
  return povm;
}

PovmSet rotate(const PovmSet& povm, const Matrix& u) {
  if (u.rows() != povm.dim || u.cols() != povm.dim)
    throw std::invalid_argument("rotate: unitary does not match POVM dimension");
  if (!u.is_unitary(1e-10)) throw std::invalid_argument("rotate: matrix not unitary");
  PovmSet out;
  out.dim = povm.dim;
  const Matrix ud = u.adjoint();
  out.elements.reserve(povm.elements.size());
  for (const Matrix& f : povm.elements) out.elements.push_back(u * f * ud);
  return out;
}

DualFrame dual_frame(const PovmSet& povm) {
  const int m = static_cast<int>(povm.elements.size());
  const int want = povm.dim * povm.dim;
  if (m != want)
    throw std::invalid_argument("dual_frame: POVM is not a minimal informationally complete set");

  // Gram system over the real vector space of Hermitian matrices.
  std::vector<std::vector<double>> gram(m, std::vector<double>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      gram[i][j] = trace_product_real(povm.elements[i], povm.elements[j]);

  // Invert by Gauss-Jordan with partial pivoting.
  std::vector<std::vector<double>> inv(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i) inv[i][i] = 1.0;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (std::abs(gram[r][col]) > std::abs(gram[piv][col])) piv = r;
    if (std::abs(gram[piv][col]) < 1e-12)
      throw std::invalid_argument("dual_frame: singular Gram matrix (POVM not informationally complete)");
    std::swap(gram[piv], gram[col]);
    std::swap(inv[piv], inv[col]);
    const double d = gram[col][col];
    for (int j = 0; j < m; ++j) {
      gram[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = gram[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j < m; ++j) {
        gram[r][j] -= f * gram[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }

  DualFrame frame;
  frame.dim = povm.dim;
  frame.duals.reserve(m);
  for (int i = 0; i < m; ++i) {
    Matrix g(povm.dim, povm.dim);
    for (int j = 0; j < m; ++j) g += inv[i][j] * povm.elements[j];
    frame.duals.push_back(std::move(g));
  }
  return frame;
}

std::vector<TransposeRelation> partial_transpose_map(const PovmSet& povm) {
  if (povm.dim != 2)
    throw std::invalid_argument(
        "partial_transpose_map: closed relations exist for the qubit tetrahedron only");
  // Transpose flips the y component of n_i, mapping each tetrahedron vertex
  // onto the antipode of its partner: F_i^T = I/2 - F_sigma(i).
  static const int partner[4] = {2, 3, 0, 1};
  std::vector<TransposeRelation> rel;
  rel.reserve(4);
  for (int i = 0; i < 4; ++i) rel.push_back({i, 0.5, -1.0, partner[i]});
  return rel;
}

}  // namespace phwit
