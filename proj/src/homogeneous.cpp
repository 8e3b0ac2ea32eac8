#include "spinclab/homogeneous.hpp"

#include <cmath>

#include "spinclab/errors.hpp"

namespace spinclab::homogeneous {

FrameModel build_frame_model(const ModelParams& p) {
  if (!std::isfinite(p.kappa) || !std::isfinite(p.tau))
    throw precondition_error("parameters must be finite");
  if (p.tau == 0.0)
    throw precondition_error(
        "frame model needs tau != 0 (product geometries fall outside the "
        "fibration family)");
  if (p.kappa == 4.0 * p.tau * p.tau)
    throw precondition_error(
        "frame model needs kappa != 4 tau^2 (constant curvature excluded)");

  FrameModel m;
  m.params = p;
  const double tau = p.tau;
  const double mu = tau - p.kappa / (2.0 * tau);  // <nabla_{e_3} e_2, e_1>

  // nabla_{e_1} e_2 = tau e_3, nabla_{e_1} e_3 = -tau e_2, and cyclic rules
  m.gamma[2][0][1] = tau;
  m.gamma[1][0][2] = -tau;
  m.gamma[2][1][0] = -tau;
  m.gamma[0][1][2] = tau;
  m.gamma[0][2][1] = mu;
  m.gamma[1][2][0] = -mu;

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        m.brackets[k][i][j] = m.gamma[k][i][j] - m.gamma[k][j][i];

  // constant-frame curvature:
  // R^l_{ijk} = G^m_{jk} G^l_{im} - G^m_{ik} G^l_{jm} - c^m_{ij} G^l_{mk}
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          double s = 0.0;
          for (int mm = 0; mm < 3; ++mm)
            s += m.gamma[mm][j][k] * m.gamma[l][i][mm] -
                 m.gamma[mm][i][k] * m.gamma[l][j][mm] -
                 m.brackets[mm][i][j] * m.gamma[l][mm][k];
          m.riemann[l][i][j][k] = s;
        }

  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) s += m.riemann[i][i][j][k];
      m.ricci(j, k) = s;
    }
  m.scalar = m.ricci.trace();
  return m;
}

double killing_field_residual(const FrameModel& m) {
  const double tau = m.params.tau;
  double res = 0.0;
  for (int k = 0; k < 3; ++k) {
    // nabla_{e_k} xi
    Eigen::Vector3d dk(m.gamma[0][k][2], m.gamma[1][k][2], m.gamma[2][k][2]);
    Eigen::Vector3d ek = Eigen::Vector3d::Unit(k);
    Eigen::Vector3d target = tau * ek.cross(Eigen::Vector3d::UnitZ());
    res = std::max(res, (dk - target).cwiseAbs().maxCoeff());
  }
  return res;
}

Eigen::Matrix3d vertical_derivative(const FrameModel& m) {
  Eigen::Matrix3d a;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) a(l, k) = m.gamma[l][k][2];
  return a;
}

double sasaki_residual(const FrameModel& m) {
  Eigen::Matrix3d a = vertical_derivative(m);
  Eigen::Matrix3d eta_xi = Eigen::Matrix3d::Zero();
  eta_xi(2, 2) = 1.0;
  return (a * a + Eigen::Matrix3d::Identity() - eta_xi).cwiseAbs().maxCoeff();
}

Eigen::Matrix3d d_invariant_oneform(const FrameModel& m, double c) {
  Eigen::Matrix3d da;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) da(i, j) = -c * m.brackets[2][i][j];
  return da;
}

RicciSpectrum ricci_spectrum(const FrameModel& m) {
  const Eigen::Matrix3d& r = m.ricci;
  double offdiag = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) offdiag = std::max(offdiag, std::abs(r(i, j)));
  double scale = 1.0 + r.cwiseAbs().maxCoeff();
  if (offdiag > 1e-12 * scale || std::abs(r(0, 0) - r(1, 1)) > 1e-12 * scale)
    throw internal_error("ricci tensor lost its frame-diagonal form");
  return {r(0, 0), r(2, 2)};
}

}  // namespace spinclab::homogeneous
