#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace spinclab::clifford {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Spinor = Eigen::VectorXcd;

// Irreducible complex Clifford module over R^n with the geometer's sign:
//   g_i g_j + g_j g_i = -2 delta_ij,   g_i^dagger = -g_i.
// Spinor space C^{2^{floor(n/2)}}; n in {2, 3, 4}.
struct Rep {
  int n = 0;
  std::vector<Matrix> gamma;

  int dim() const { return gamma.empty() ? 0 : static_cast<int>(gamma[0].rows()); }
};

Rep build_rep(int n);

// Clifford action of the frame vector with components x: sum_i x_i g_i psi.
Spinor mul(const Rep& rep, const Eigen::VectorXd& x, const Spinor& psi);

// Action of an antisymmetric two-form: sum_{i<j} w(i,j) g_i g_j.
Matrix two_form_action(const Rep& rep, const Eigen::MatrixXd& w);

// i^{floor((n+1)/2)} g_1 ... g_n.  Equals the identity for n = 3 with this
// rep, and is the grading operator for even n.
Matrix complex_volume_element(const Rep& rep);

// Orthonormal basis (columns) of the (+1 or -1) eigenspace of the complex
// volume element; even n only.
Matrix half_spinor_basis(const Rep& rep, int sign);

// Antilinear map on the n = 2 module with c(X.psi) = X.c(psi) and c^2 = -1.
// In coordinates c(a, b) = (-conj(b), conj(a)).
Spinor charge_conjugate(const Rep& rep, const Spinor& psi);

// psi^+ - psi^- with respect to the complex volume splitting; even n only.
Spinor grading_flip(const Rep& rep, const Spinor& psi);

// Hypersurface module structure: X acts as X . nu . psi where nu is the
// ambient frame vector of index nu_index and X must be orthogonal to it.
Spinor restricted_mul(const Rep& ambient, const Eigen::VectorXd& x,
                      const Spinor& psi, int nu_index);

// The induced generators g_a g_nu, a != nu, compressed to the +1 half-spinor
// block when the ambient dimension is even.
std::vector<Matrix> restricted_generators(const Rep& ambient, int nu_index);

// Kaehler two-form of R^{2m} (e1^e2 + e3^e4 + ...) as an antisymmetric matrix.
Eigen::MatrixXd kahler_form(int m);

// Eigenvalues, ascending, of scal*Id + 2i*Omega. acting on the 2m-dimensional
// model where Omega = (scal/(2m)) * kahler form; requires scal > 0, m in {1,2}.
// Closed form scal * 2r/m with multiplicity binom(m, r).
Eigen::VectorXd kahler_operator_eigenvalues(double scal, int m = 2);

}  // namespace spinclab::clifford
