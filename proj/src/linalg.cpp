#include "phwit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace phwit {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

namespace {

void require_composite_square(const Matrix& m, const BipartiteDims& dims, const char* what) {
  if (m.rows() != m.cols() || m.rows() != dims.total())
    throw std::invalid_argument(std::string(what) + ": matrix does not match dims");
}

}  // namespace

Matrix partial_transpose(const Matrix& m, const BipartiteDims& dims) {
  require_composite_square(m, dims, "partial_transpose");
  const int da = dims.dim_a, db = dims.dim_b;
  Matrix r(m.rows(), m.cols());
  for (int a = 0; a < da; ++a)
    for (int ap = 0; ap < da; ++ap)
      for (int b = 0; b < db; ++b)
        for (int bp = 0; bp < db; ++bp)
          r(a * db + b, ap * db + bp) = m(a * db + bp, ap * db + b);
  return r;
}

Matrix partial_trace(const Matrix& m, const BipartiteDims& dims, Subsystem keep) {
  require_composite_square(m, dims, "partial_trace");
  const int da = dims.dim_a, db = dims.dim_b;
  if (keep == Subsystem::A) {
    Matrix r(da, da);
    for (int a = 0; a < da; ++a)
      for (int ap = 0; ap < da; ++ap) {
        Complex s = 0.0;
        for (int b = 0; b < db; ++b) s += m(a * db + b, ap * db + b);
        r(a, ap) = s;
      }
    return r;
  }
  Matrix r(db, db);
  for (int b = 0; b < db; ++b)
    for (int bp = 0; bp < db; ++bp) {
      Complex s = 0.0;
      for (int a = 0; a < da; ++a) s += m(a * db + b, a * db + bp);
      r(b, bp) = s;
    }
  return r;
}

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kOffDiagTol = 1e-14;
constexpr int kMaxSweeps = 100;

double offdiag_frobenius(const Matrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eigendecomposition(const Matrix& input) {
  if (input.rows() != input.cols())
    throw std::invalid_argument("hermitian_eigendecomposition: matrix not square");
  if (!input.is_hermitian(kHermTol))
    throw std::invalid_argument("hermitian_eigendecomposition: matrix not Hermitian");

  const int n = input.rows();
  // Symmetrize to absorb roundoff before iterating.
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

  Matrix v = Matrix::identity(n);
  const double scale = std::max(1.0, m.frobenius_norm());

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_frobenius(m) <= kOffDiagTol * scale) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex mpq = m(p, q);
        const double apq = std::abs(mpq);
        if (apq <= 1e-300) continue;
        // Phase factor making the (p,q) entry real, then a real Jacobi
        // rotation on the 2x2 block [[a, |mpq|], [|mpq|, c]].
        // J restricted to (p,q): [[cs, sn], [-sn*conj(u), cs*conj(u)]].
        const Complex u = mpq / apq;
        const Complex ub = std::conj(u);
        const double a = m(p, p).real();
        const double c = m(q, q).real();
        const double theta = (c - a) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;
        for (int i = 0; i < n; ++i) {  // m <- m J
          const Complex mip = m(i, p), miq = m(i, q);
          m(i, p) = cs * mip - sn * ub * miq;
          m(i, q) = sn * mip + cs * ub * miq;
        }
        for (int j = 0; j < n; ++j) {  // m <- J^dag m
          const Complex mpj = m(p, j), mqj = m(q, j);
          m(p, j) = cs * mpj - sn * u * mqj;
          m(q, j) = sn * mpj + cs * u * mqj;
        }
        for (int i = 0; i < n; ++i) {  // v <- v J
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = cs * vip - sn * ub * viq;
          v(i, q) = sn * vip + cs * ub * viq;
        }
      }
    }
  }

  EigResult res;
  res.values.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = m(i, i).real();
  std::sort(order.begin(), order.end(), [&](int x, int y) { return diag[x] < diag[y]; });
  res.vectors = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    res.values[k] = diag[order[k]];
    for (int i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]);
  }
  return res;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  return hermitian_eigendecomposition(m).values;
}

}  // namespace phwit
