#include "phwit/witness.hpp"

#include <cmath>

#include "phwit/povm.hpp"

namespace phwit {

namespace {

constexpr double kUnitaryTol = 1e-10;

Matrix ketbra(int dim, int i, int j) {
  Matrix m(dim, dim);
  m(i, j) = 1.0;
  return m;
}

/// Immutable per-dimension tables: POVMs, witness operators, and the
/// probability-path coefficients. Built once, shared by all threads.
struct WitnessContext {
  BipartiteDims dims;
  PovmSet povm_a;
  PovmSet povm_b;
  WitnessOperators ops;
  // y_coeff[k][i * nb + j] with Y_k = sum_ij coeff * P_ij; used for the
  // (4,9) table, which has no hard-coded combination.
  std::array<std::vector<double>, 3> y_coeff;

  explicit WitnessContext(const BipartiteDims& d) : dims(d) {
    povm_a = qubit_tetrahedron();
    povm_b = (d.dim_b == 2) ? qubit_tetrahedron() : qutrit_simplex();

    const int db = d.dim_b;
    const Matrix e01a = ketbra(2, 0, 1);
    const Matrix e01b = ketbra(db, 0, 1);
    const Matrix p0a = ketbra(2, 0, 0), p1a = ketbra(2, 1, 1);
    const Matrix p0b = ketbra(db, 0, 0), p1b = ketbra(db, 1, 1);

    Matrix x1 = kron(e01a, e01b);
    x1 += x1.adjoint();
    ops.xhat[0] = 2.0 * x1;
    ops.xhat[1] = 2.0 * (kron(p0a, p0b) - kron(p1a, p1b));
    ops.xhat[2] = 2.0 * (kron(p0a, p0b) + kron(p1a, p1b));
    for (int k = 0; k < 3; ++k) ops.yhat[k] = partial_transpose(ops.xhat[k], d);

    const DualFrame ga = dual_frame(povm_a);
    const DualFrame gb = dual_frame(povm_b);
    const int na = static_cast<int>(povm_a.elements.size());
    const int nb = static_cast<int>(povm_b.elements.size());
    for (int k = 0; k < 3; ++k) {
      y_coeff[k].resize(static_cast<size_t>(na) * nb);
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          y_coeff[k][static_cast<size_t>(i) * nb + j] =
              trace_product_real(kron(ga.duals[i], gb.duals[j]), ops.yhat[k]);
    }
  }
};

const WitnessContext& context_for(const BipartiteDims& dims) {
  static const WitnessContext qubit_ctx{BipartiteDims(2, 2)};
  static const WitnessContext qutrit_ctx{BipartiteDims(2, 3)};
  return dims.dim_b == 2 ? qubit_ctx : qutrit_ctx;
}

}  // namespace

double JointProbabilityTable::sum() const {
  double s = 0.0;
  for (double x : p) s += x;
  return s;
}

JointProbabilityTable joint_probabilities(const DensityMatrix& rho, const Matrix& u,
                                          const Matrix& v) {
  const BipartiteDims& dims = rho.dims();
  if (u.rows() != 2 || u.cols() != 2 || v.rows() != dims.dim_b || v.cols() != dims.dim_b)
    throw std::invalid_argument("joint_probabilities: setting dimensions do not match state");
  if (!u.is_unitary(kUnitaryTol) || !v.is_unitary(kUnitaryTol))
    throw std::invalid_argument("joint_probabilities: settings must be unitary");

  const WitnessContext& ctx = context_for(dims);
  const PovmSet fa = rotate(ctx.povm_a, u);
  const PovmSet fb = rotate(ctx.povm_b, v);
  const int na = static_cast<int>(fa.elements.size());
  const int nb = static_cast<int>(fb.elements.size());
  const int da = dims.dim_a, db = dims.dim_b;
  const Matrix& r = rho.matrix();

  JointProbabilityTable table;
  table.na = na;
  table.nb = nb;
  table.p.assign(static_cast<size_t>(na) * nb, 0.0);
  table.pa.assign(na, 0.0);
  table.pb.assign(nb, 0.0);

  for (int j = 0; j < nb; ++j) {
    // E_j = tr_B[rho (I x F_j)], a da x da block contraction.
    Matrix e(da, da);
    const Matrix& bj = fb.elements[j];
    for (int a = 0; a < da; ++a)
      for (int ap = 0; ap < da; ++ap) {
        Complex s = 0.0;
        for (int b = 0; b < db; ++b)
          for (int bp = 0; bp < db; ++bp) s += r(a * db + b, ap * db + bp) * bj(bp, b);
        e(a, ap) = s;
      }
    for (int i = 0; i < na; ++i) {
      const double pij = trace_product_real(e, fa.elements[i]);
      table.p[static_cast<size_t>(i) * nb + j] = pij;
      table.pa[i] += pij;
      table.pb[j] += pij;
    }
  }

  if (std::abs(table.sum() - 1.0) > 1e-10)
    throw std::invalid_argument("joint_probabilities: probabilities do not sum to 1");
  return table;
}

YTriple y_from_probabilities(const JointProbabilityTable& table) {
  if (table.na == 4 && table.nb == 4) {
    const auto p = [&](int i, int j) { return table.at(i - 1, j - 1); };
    const double diag = p(1, 1) + p(2, 2) + p(3, 3) + p(4, 4);
    const double anti = p(1, 4) + p(4, 1) + p(2, 3) + p(3, 2);
    const double rest = p(1, 2) + p(2, 1) + p(1, 3) + p(3, 1) + p(2, 4) + p(4, 2) +
                        p(3, 4) + p(4, 3);
    YTriple y;
    y.y1 = 6.0 * (diag - anti);
    y.y2 = std::sqrt(3.0) * (table.pa[0] + table.pa[3] - table.pa[1] - table.pa[2] +
                             table.pb[0] + table.pb[3] - table.pb[1] - table.pb[2]);
    y.y3 = 1.0 + 3.0 * (diag + anti - rest);
    return y;
  }
  if (table.na == 4 && table.nb == 9) {
    const WitnessContext& ctx = context_for(BipartiteDims(2, 3));
    YTriple y;
    double* out[3] = {&y.y1, &y.y2, &y.y3};
    for (int k = 0; k < 3; ++k) {
      double s = 0.0;
      for (size_t idx = 0; idx < table.p.size(); ++idx) s += ctx.y_coeff[k][idx] * table.p[idx];
      *out[k] = s;
    }
    return y;
  }
  throw std::invalid_argument("y_from_probabilities: table must be 4x4 or 4x9");
}

const WitnessOperators& y_operators(const BipartiteDims& dims) {
  return context_for(dims).ops;
}

namespace {

YTriple trace_triple(const DensityMatrix& rho, const Matrix& u, const Matrix& v,
                     const std::array<Matrix, 3>& ops) {
  const BipartiteDims& dims = rho.dims();
  if (u.rows() != 2 || u.cols() != 2 || v.rows() != dims.dim_b || v.cols() != dims.dim_b)
    throw std::invalid_argument("operator path: setting dimensions do not match state");
  if (!u.is_unitary(kUnitaryTol) || !v.is_unitary(kUnitaryTol))
    throw std::invalid_argument("operator path: settings must be unitary");
  const Matrix w = kron(u, v);
  const Matrix sigma = w.adjoint() * rho.matrix() * w;
  YTriple y;
  y.y1 = trace_product_real(sigma, ops[0]);
  y.y2 = trace_product_real(sigma, ops[1]);
  y.y3 = trace_product_real(sigma, ops[2]);
  return y;
}

}  // namespace

YTriple y_operator_path(const DensityMatrix& rho, const Matrix& u, const Matrix& v) {
  return trace_triple(rho, u, v, context_for(rho.dims()).ops.yhat);
}

YTriple x_operator_path(const DensityMatrix& rho, const Matrix& u, const Matrix& v) {
  return trace_triple(rho, u, v, context_for(rho.dims()).ops.xhat);
}

double i_ph(const YTriple& y) { return y.y1 * y.y1 + y.y2 * y.y2 - y.y3 * y.y3; }

double i_ph(const DensityMatrix& rho, const Matrix& u, const Matrix& v) {
  return i_ph(y_from_probabilities(joint_probabilities(rho, u, v)));
}

QuadraticCoeffs quadratic_coeffs(const DensityMatrix& rho, const Matrix& u, const Matrix& v) {
  const YTriple y = y_from_probabilities(joint_probabilities(rho, u, v));
  return QuadraticCoeffs{y.y2 + y.y3, 2.0 * y.y1, y.y3 - y.y2};
}

double chsh_max(const DensityMatrix& rho) {
  if (rho.dims().dim_b != 2)
    throw std::invalid_argument("chsh_max: defined for two-qubit states only");
  const auto& sigma = pauli_matrices();
  double t[3][3];
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      t[k][l] = trace_product_real(rho.matrix(), kron(sigma[k], sigma[l]));
  Matrix tt(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += t[k][i] * t[k][j];
      tt(i, j) = s;
    }
  const std::vector<double> m = hermitian_eigenvalues(tt);  // ascending, size 3
  return 2.0 * std::sqrt(std::max(0.0, m[1] + m[2]));
}

double degree_of_entanglement(double i_ph_max) { return std::max(0.0, i_ph_max / 4.0); }

}  // namespace phwit
