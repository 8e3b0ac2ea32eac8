#include "spinclab/spinc.hpp"

#include <cmath>

#include "spinclab/errors.hpp"

namespace spinclab::spinc {

namespace {

const cd kI{0.0, 1.0};

}  // namespace

Connection build_connection(const homogeneous::FrameModel& m,
                            const Eigen::Vector3d& aux) {
  if (!aux.allFinite()) throw precondition_error("potential must be finite");
  Connection conn;
  conn.model = m;
  conn.rep = clifford::build_rep(3);
  conn.aux = aux;
  for (int k = 0; k < 3; ++k) {
    Eigen::Matrix2cd mk = (kI / 2.0) * aux(k) * Eigen::Matrix2cd::Identity();
    for (int j = 0; j < 3; ++j)
      for (int mm = 0; mm < 3; ++mm)
        if (m.gamma[mm][k][j] != 0.0)
          mk += 0.25 * m.gamma[mm][k][j] *
                (conn.rep.gamma[j] * conn.rep.gamma[mm]);
    conn.M[k] = mk;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int mm = 0; mm < 3; ++mm) s += aux(mm) * m.brackets[mm][i][j];
      conn.omega(i, j) = -s;
    }
  return conn;
}

Eigen::Vector3d canonical_aux(const homogeneous::ModelParams& p) {
  if (p.tau == 0.0)
    throw precondition_error("canonical potential needs tau != 0");
  return {0.0, 0.0, (p.kappa - 4.0 * p.tau * p.tau) / (2.0 * p.tau)};
}

Eigen::Vector3d anti_canonical_aux(const homogeneous::ModelParams& p) {
  return -canonical_aux(p);
}

Connection deform(const Connection& conn, double c) {
  Connection out = conn;
  out.aux(2) += c;
  out.M[2] += (kI / 2.0) * c * Eigen::Matrix2cd::Identity();
  out.omega += homogeneous::d_invariant_oneform(conn.model, c);
  return out;
}

Eigen::Matrix2cd curvature(const Connection& conn, int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2)
    throw precondition_error("frame index out of range");
  Eigen::Matrix2cd f = conn.M[i] * conn.M[j] - conn.M[j] * conn.M[i];
  for (int m = 0; m < 3; ++m)
    if (conn.model.brackets[m][i][j] != 0.0)
      f -= conn.model.brackets[m][i][j] * conn.M[m];
  return f;
}

KillingSolution killing_solve(const Connection& conn, double alpha) {
  Eigen::MatrixXcd stacked(6, 2);
  for (int k = 0; k < 3; ++k)
    stacked.block(2 * k, 0, 2, 2) = conn.M[k] - alpha * conn.rep.gamma[k];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
  KillingSolution sol;
  sol.alpha = alpha;
  double smax = svd.singularValues()(0);
  double cutoff = 1e-9 * smax;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++rank;
  for (int c = rank; c < 2; ++c)
    sol.basis.push_back(svd.matrixV().col(c).normalized());
  if (sol.basis.size() == 1) {
    const Eigen::Vector2cd& psi = sol.basis[0];
    sol.xi_eigenvalue = psi.dot(conn.rep.gamma[2] * psi);
    sol.xi_residual =
        (conn.rep.gamma[2] * psi - sol.xi_eigenvalue * psi).norm();
  }
  return sol;
}

Eigen::Matrix2cd dirac_matrix(const Connection& conn) {
  Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
  for (int k = 0; k < 3; ++k) d += conn.rep.gamma[k] * conn.M[k];
  return d;
}

double ricci_identity_residual(const Connection& conn) {
  double res = 0.0;
  for (int k = 0; k < 3; ++k) {
    Eigen::Matrix2cd lhs = Eigen::Matrix2cd::Zero();
    for (int j = 0; j < 3; ++j) lhs += conn.rep.gamma[j] * curvature(conn, j, k);
    Eigen::Matrix2cd rhs = Eigen::Matrix2cd::Zero();
    for (int l = 0; l < 3; ++l)
      rhs += 0.5 * conn.model.ricci(k, l) * conn.rep.gamma[l];
    for (int j = 0; j < 3; ++j)
      rhs -= (kI / 2.0) * conn.omega(k, j) * conn.rep.gamma[j];
    res = std::max(res, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return res;
}

double lichnerowicz_residual(const Connection& conn) {
  Eigen::Matrix2cd d = dirac_matrix(conn);
  Eigen::Matrix2cd lhs = d * d;
  Eigen::Matrix2cd rhs =
      (conn.model.scalar / 4.0) * Eigen::Matrix2cd::Identity();
  for (int k = 0; k < 3; ++k) rhs -= conn.M[k] * conn.M[k];
  rhs += (kI / 2.0) * clifford::two_form_action(conn.rep, conn.omega);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace spinclab::spinc
