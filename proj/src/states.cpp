#include "phwit/states.hpp"

#include <cmath>

#include "phwit/rng.hpp"

namespace phwit {

DensityMatrix::DensityMatrix(BipartiteDims dims, Matrix matrix)
    : dims_(dims), mat_(std::move(matrix)) {
  if (mat_.rows() != dims_.total() || mat_.cols() != dims_.total())
    throw std::invalid_argument("DensityMatrix: matrix does not match dims");
  if (!mat_.is_hermitian(kHermitianTol))
    throw std::invalid_argument("DensityMatrix: matrix not Hermitian");
  if (std::abs(mat_.trace() - Complex(1.0)) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace not 1");
  if (hermitian_eigenvalues(mat_).front() < kPsdTol)
    throw std::invalid_argument("DensityMatrix: matrix not positive semidefinite");
}

double PureSchmidtState::t() const { return std::tan(xi); }

Matrix PureSchmidtState::ket(const BipartiteDims& dims) const {
  Matrix k(dims.total(), 1);
  k(0, 0) = std::sin(xi);                    // |0>_A |0>_B
  k(1 * dims.dim_b + 1, 0) = std::cos(xi);   // |1>_A |1>_B
  return k;
}

Matrix PureSchmidtState::projector(const BipartiteDims& dims) const {
  const Matrix k = ket(dims);
  return k * k.adjoint();
}

double MemsParams::g() const { return gamma >= 2.0 / 3.0 ? gamma / 2.0 : 1.0 / 3.0; }

DensityMatrix werner(const WernerParams& params) {
  if (params.theta < 0.0 || params.theta > std::acos(-1.0))
    throw std::invalid_argument("werner: theta outside [0, pi]");
  if (params.alpha < 0.0 || params.alpha > 1.0)
    throw std::invalid_argument("werner: alpha outside [0, 1]");
  const double c = std::cos(params.theta), s = std::sin(params.theta);
  Matrix m(4, 4);
  m(0, 0) = params.alpha * c * c;
  m(3, 3) = params.alpha * s * s;
  m(0, 3) = m(3, 0) = params.alpha * c * s;
  for (int i = 0; i < 4; ++i) m(i, i) += (1.0 - params.alpha) / 4.0;
  return DensityMatrix(BipartiteDims(2, 2), m);
}

DensityMatrix mems(const MemsParams& params) {
  if (params.gamma < 0.0 || params.gamma > 1.0)
    throw std::invalid_argument("mems: gamma outside [0, 1]");
  const double g = params.g();
  Matrix m(4, 4);
  m(0, 0) = g;
  m(1, 1) = 1.0 - 2.0 * g;
  m(3, 3) = g;
  m(0, 3) = m(3, 0) = params.gamma / 2.0;
  return DensityMatrix(BipartiteDims(2, 2), m);
}

DensityMatrix maximally_mixed(const BipartiteDims& dims) {
  const int n = dims.total();
  return DensityMatrix(dims, Matrix::identity(n) * (1.0 / n));
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dims().dim_b != 2)
    throw std::invalid_argument("concurrence: defined for two-qubit states only");
  // S = sigma_y (x) sigma_y; lambda_i are sqrt-eigenvalues of rho S rho* S,
  // obtained from the Hermitian form sqrt(rho) S rho* S sqrt(rho).
  Matrix s(4, 4);
  s(0, 3) = -1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 0) = -1.0;
  const EigResult eig = hermitian_eigendecomposition(rho.matrix());
  Matrix sqrt_rho(4, 4);
  for (int k = 0; k < 4; ++k) {
    const double lk = std::sqrt(std::max(0.0, eig.values[k]));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        sqrt_rho(i, j) += lk * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  const Matrix m = sqrt_rho * s * rho.matrix().conjugate() * s * sqrt_rho;
  const std::vector<double> vals = hermitian_eigenvalues(m);  // ascending
  double c = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double lam = std::sqrt(std::max(0.0, vals[k]));
    c += (k == 3 ? lam : -lam);
  }
  return std::max(0.0, c);
}

double ppt_min_eigenvalue(const DensityMatrix& rho) {
  return hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.dims())).front();
}

DensityMatrix random_state(const BipartiteDims& dims, std::uint64_t seed) {
  Rng rng(seed);
  const int n = dims.total();
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  Matrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return DensityMatrix(dims, rho);
}

namespace {

Matrix random_pure_ket(int dim, Rng& rng) {
  Matrix k(dim, 1);
  double norm2 = 0.0;
  for (int i = 0; i < dim; ++i) {
    k(i, 0) = Complex(rng.normal(), rng.normal());
    norm2 += std::norm(k(i, 0));
  }
  k *= Complex(1.0 / std::sqrt(norm2));
  return k;
}

}  // namespace

DensityMatrix random_separable(const BipartiteDims& dims, int terms, std::uint64_t seed) {
  if (terms < 1) throw std::invalid_argument("random_separable: terms must be >= 1");
  Rng rng(seed);
  // Flat Dirichlet weights via normalized exponentials.
  std::vector<double> w(terms);
  double wsum = 0.0;
  for (int k = 0; k < terms; ++k) {
    w[k] = -std::log(1.0 - rng.uniform01());
    wsum += w[k];
  }
  Matrix rho(dims.total(), dims.total());
  for (int k = 0; k < terms; ++k) {
    const Matrix a = random_pure_ket(dims.dim_a, rng);
    const Matrix b = random_pure_ket(dims.dim_b, rng);
    const Matrix ab = kron(a, b);
    rho += (w[k] / wsum) * (ab * ab.adjoint());
  }
  return DensityMatrix(dims, rho);
}

}  // namespace phwit
