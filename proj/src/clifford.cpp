#include "spinclab/clifford.hpp"

#include <cmath>

#include "spinclab/errors.hpp"

namespace spinclab::clifford {

namespace {

const cd kI{0.0, 1.0};

Matrix pauli(int a) {
  Matrix m(2, 2);
  switch (a) {
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kI, kI, 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_spinor_size(const Rep& rep, const Spinor& psi) {
  if (psi.size() != rep.dim())
    throw precondition_error("spinor size does not match the module dimension");
}

}  // namespace

Rep build_rep(int n) {
  Rep rep;
  rep.n = n;
  Matrix id2 = Matrix::Identity(2, 2);
  switch (n) {
    case 2:
      rep.gamma = {-kI * pauli(1), -kI * pauli(2)};
      break;
    case 3:
      rep.gamma = {-kI * pauli(1), -kI * pauli(2), -kI * pauli(3)};
      break;
    case 4:
      rep.gamma = {kI * kron(pauli(1), id2), kI * kron(pauli(2), id2),
                   kI * kron(pauli(3), pauli(1)), kI * kron(pauli(3), pauli(2))};
      break;
    default:
      throw precondition_error("module built for n in {2, 3, 4} only");
  }
  return rep;
}

Spinor mul(const Rep& rep, const Eigen::VectorXd& x, const Spinor& psi) {
  if (x.size() != rep.n)
    throw precondition_error("vector size does not match the module dimension");
  require_spinor_size(rep, psi);
  Spinor out = Spinor::Zero(rep.dim());
  for (int i = 0; i < rep.n; ++i)
    if (x(i) != 0.0) out += x(i) * (rep.gamma[i] * psi);
  return out;
}

Matrix two_form_action(const Rep& rep, const Eigen::MatrixXd& w) {
  if (w.rows() != rep.n || w.cols() != rep.n)
    throw precondition_error("two-form size does not match the module dimension");
  if ((w + w.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw precondition_error("two-form must be antisymmetric");
  Matrix out = Matrix::Zero(rep.dim(), rep.dim());
  for (int i = 0; i < rep.n; ++i)
    for (int j = i + 1; j < rep.n; ++j)
      if (w(i, j) != 0.0) out += w(i, j) * (rep.gamma[i] * rep.gamma[j]);
  return out;
}

Matrix complex_volume_element(const Rep& rep) {
  Matrix out = Matrix::Identity(rep.dim(), rep.dim());
  for (int i = 0; i < rep.n; ++i) out = out * rep.gamma[i];
  int power = (rep.n + 1) / 2;
  cd phase = std::pow(kI, power);
  return phase * out;
}

Matrix half_spinor_basis(const Rep& rep, int sign) {
  if (rep.n % 2 != 0)
    throw precondition_error("half-spinor splitting needs an even dimension");
  if (sign != 1 && sign != -1) throw precondition_error("sign must be +1 or -1");
  Matrix vol = complex_volume_element(rep);
  Eigen::SelfAdjointEigenSolver<Matrix> es(vol);
  int d = rep.dim();
  Matrix basis(d, d / 2);
  int c = 0;
  for (int i = 0; i < d; ++i) {
    if (std::abs(es.eigenvalues()(i) - sign) < 1e-10) {
      if (c == d / 2) throw internal_error("half-spinor space dimension is off");
      basis.col(c++) = es.eigenvectors().col(i);
    }
  }
  if (c != d / 2) throw internal_error("half-spinor space dimension is off");
  return basis;
}

Spinor charge_conjugate(const Rep& rep, const Spinor& psi) {
  if (rep.n != 2)
    throw precondition_error("charge conjugation implemented on the 2d module");
  require_spinor_size(rep, psi);
  Spinor out(2);
  out(0) = -std::conj(psi(1));
  out(1) = std::conj(psi(0));
  return out;
}

Spinor grading_flip(const Rep& rep, const Spinor& psi) {
  if (rep.n % 2 != 0)
    throw precondition_error("grading flip needs an even dimension");
  require_spinor_size(rep, psi);
  return complex_volume_element(rep) * psi;
}

Spinor restricted_mul(const Rep& ambient, const Eigen::VectorXd& x,
                      const Spinor& psi, int nu_index) {
  if (nu_index < 0 || nu_index >= ambient.n)
    throw precondition_error("normal index out of range");
  if (x.size() != ambient.n)
    throw precondition_error("vector size does not match the ambient dimension");
  if (std::abs(x(nu_index)) > 1e-12 * (1.0 + x.norm()))
    throw precondition_error("vector must be tangent (no normal component)");
  require_spinor_size(ambient, psi);
  Eigen::VectorXd nu = Eigen::VectorXd::Zero(ambient.n);
  nu(nu_index) = 1.0;
  return mul(ambient, x, mul(ambient, nu, psi));
}

std::vector<Matrix> restricted_generators(const Rep& ambient, int nu_index) {
  if (nu_index < 0 || nu_index >= ambient.n)
    throw precondition_error("normal index out of range");
  std::vector<Matrix> out;
  if (ambient.n % 2 == 0) {
    Matrix plus = half_spinor_basis(ambient, +1);
    for (int a = 0; a < ambient.n; ++a) {
      if (a == nu_index) continue;
      out.push_back(plus.adjoint() * ambient.gamma[a] * ambient.gamma[nu_index] *
                    plus);
    }
  } else {
    for (int a = 0; a < ambient.n; ++a) {
      if (a == nu_index) continue;
      out.push_back(ambient.gamma[a] * ambient.gamma[nu_index]);
    }
  }
  return out;
}

Eigen::MatrixXd kahler_form(int m) {
  if (m < 1) throw precondition_error("kahler form needs m >= 1");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (int r = 0; r < m; ++r) {
    w(2 * r, 2 * r + 1) = 1.0;
    w(2 * r + 1, 2 * r) = -1.0;
  }
  return w;
}

Eigen::VectorXd kahler_operator_eigenvalues(double scal, int m) {
  if (!(scal > 0.0))
    throw precondition_error("kahler operator analysis needs scal > 0");
  if (m != 1 && m != 2)
    throw precondition_error("model space built for m in {1, 2} only");
  Rep rep = build_rep(2 * m);
  Matrix k = two_form_action(rep, kahler_form(m));
  Matrix op = scal * Matrix::Identity(rep.dim(), rep.dim()) +
              2.0 * kI * (scal / (2.0 * m)) * k;
  Eigen::SelfAdjointEigenSolver<Matrix> es(op);
  if (es.eigenvalues()(0) < -1e-10 * scal)
    throw internal_error("kahler operator lost nonnegativity");
  return es.eigenvalues();
}

}  // namespace spinclab::clifford
