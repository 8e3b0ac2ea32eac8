#pragma once

// Test-only curvature oracle: central finite differences of a coordinate
// metric, independent of the frame algebra under test.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <functional>

namespace fd {

using Metric = std::function<Eigen::Matrix3d(const Eigen::Vector3d&)>;

inline std::array<Eigen::Matrix3d, 3> christoffels(const Metric& g,
                                                   const Eigen::Vector3d& p,
                                                   double h) {
  Eigen::Matrix3d ginv = g(p).inverse();
  std::array<Eigen::Matrix3d, 3> dg;
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d ep = p, em = p;
    ep(i) += h;
    em(i) -= h;
    dg[i] = (g(ep) - g(em)) / (2.0 * h);
  }
  std::array<Eigen::Matrix3d, 3> G;
  for (auto& m : G) m.setZero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l)
          s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        G[k](i, j) = 0.5 * s;
      }
  return G;
}

struct Curvature {
  Eigen::Matrix3d ricci;       // lower indices
  Eigen::Matrix3d ricci_endo;  // one index raised
  double scalar = 0.0;
};

inline Curvature curvature(const Metric& g, const Eigen::Vector3d& p, double h) {
  auto G = christoffels(g, p, h);
  std::array<std::array<Eigen::Matrix3d, 3>, 3> dG;
  for (int a = 0; a < 3; ++a) {
    Eigen::Vector3d ep = p, em = p;
    ep(a) += h;
    em(a) -= h;
    auto Gp = christoffels(g, ep, h);
    auto Gm = christoffels(g, em, h);
    for (int k = 0; k < 3; ++k) dG[a][k] = (Gp[k] - Gm[k]) / (2.0 * h);
  }
  // R^l_{ijk} = d_i G^l_{jk} - d_j G^l_{ik} + G^l_{im} G^m_{jk} - G^l_{jm} G^m_{ik}
  Curvature out;
  out.ricci.setZero();
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) {
        s += dG[i][i](j, k) - dG[j][i](i, k);
        for (int m = 0; m < 3; ++m)
          s += G[i](i, m) * G[m](j, k) - G[i](j, m) * G[m](i, k);
      }
      out.ricci(j, k) = s;
    }
  out.ricci_endo = g(p).inverse() * out.ricci;
  out.scalar = out.ricci_endo.trace();
  return out;
}

// Fibration chart valid for every base curvature kappa (disc r^2 < -4/kappa
// when kappa < 0): conformal base metric times the connection form of
// curvature -2 tau.
inline Metric fibration_model(double kappa, double tau) {
  return [kappa, tau](const Eigen::Vector3d& p) {
    double lam = 1.0 / (1.0 + (kappa / 4.0) * (p(0) * p(0) + p(1) * p(1)));
    Eigen::Vector3d w(tau * lam * p(1), -tau * lam * p(0), 1.0);
    Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
    g(0, 0) = lam * lam;
    g(1, 1) = lam * lam;
    g += w * w.transpose();
    return g;
  };
}

// Chart of the 3-sphere q = (sqrt(1-|u|^2), u) carrying the squashed metric
// (4/kappa)[round + (4 tau^2/kappa - 1) eta (x) eta]; kappa > 0.
inline Metric squashed_sphere_model(double kappa, double tau) {
  return [kappa, tau](const Eigen::Vector3d& u) {
    double q0 = std::sqrt(1.0 - u.squaredNorm());
    Eigen::Matrix3d ground = Eigen::Matrix3d::Identity() +
                             (u * u.transpose()) / (q0 * q0);
    Eigen::Vector3d eta(u(0) * u(0) / q0 + q0, u(0) * u(1) / q0 - u(2),
                        u(0) * u(2) / q0 + u(1));
    double t2 = 4.0 * tau * tau / kappa;
    return Eigen::Matrix3d((4.0 / kappa) *
                           (ground + (t2 - 1.0) * (eta * eta.transpose())));
  };
}

}  // namespace fd
