#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "spinclab/clifford.hpp"
#include "spinclab/homogeneous.hpp"

namespace spinclab::spinc {

using cd = std::complex<double>;

// Frame data of an invariant spin-c connection on the homogeneous 3-space.
// The auxiliary line-bundle potential is A(e_k) = i * aux_k, so
//   M_k = 1/4 sum_{j,m} gamma[m][k][j] g_j g_m + (i/2) aux_k Id,
// and its curvature two-form is omega(e_i, e_j) = -sum_m aux_m c^m_ij.
struct Connection {
  homogeneous::FrameModel model;
  clifford::Rep rep;  // n = 3
  Eigen::Vector3d aux = Eigen::Vector3d::Zero();
  std::array<Eigen::Matrix2cd, 3> M{};
  Eigen::Matrix3d omega = Eigen::Matrix3d::Zero();
};

Connection build_connection(const homogeneous::FrameModel& m,
                            const Eigen::Vector3d& aux);

// aux = (0, 0, (kappa - 4 tau^2)/(2 tau)): the vertical potential whose
// curvature is -(kappa - 4 tau^2) e1^e2 and which admits an invariant
// Killing spinor with constant tau/2.
Eigen::Vector3d canonical_aux(const homogeneous::ModelParams& p);
Eigen::Vector3d anti_canonical_aux(const homogeneous::ModelParams& p);

// Shift the vertical potential: M_3 -> M_3 + (i/2) c, curvature gains
// d(c eta).  Computed directly, not by rebuilding, so it can be cross
// checked against build_connection with shifted aux.
Connection deform(const Connection& conn, double c);

// F(e_i, e_j) = [M_i, M_j] - sum_m c^m_ij M_m.
Eigen::Matrix2cd curvature(const Connection& conn, int i, int j);

struct KillingSolution {
  double alpha = 0.0;
  std::vector<Eigen::Vector2cd> basis;  // orthonormal spanning set
  cd xi_eigenvalue{0.0, 0.0};           // of g_3 on the solution, dim 1 only
  double xi_residual = 0.0;             // | g_3 psi - xi_eigenvalue psi |
};

// Invariant solutions of M_k psi = alpha g_k psi for all k, found as the
// nullspace of the stacked 6x2 system (singular values below
// 1e-9 * sigma_max count as zero).
KillingSolution killing_solve(const Connection& conn, double alpha);

// D = sum_k g_k M_k; on an invariant spinor this is the full Dirac operator.
Eigen::Matrix2cd dirac_matrix(const Connection& conn);

// max_k | sum_j g_j F(e_j, e_k) - 1/2 sum_l ricci(k,l) g_l
//         + (i/2) sum_j omega(k,j) g_j |_max
double ricci_identity_residual(const Connection& conn);

// | D^2 - ( -sum_k M_k^2 + scal/4 + (i/2) sum_{i<j} omega(i,j) g_i g_j ) |_max
// (valid in this frame because nabla_{e_k} e_k = 0 for every k).
double lichnerowicz_residual(const Connection& conn);

}  // namespace spinclab::spinc
