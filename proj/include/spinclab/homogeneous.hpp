#pragma once

#include <Eigen/Dense>
#include <array>

namespace spinclab::homogeneous {

struct ModelParams {
  double kappa = 0.0;  // curvature of the base surface
  double tau = 0.0;    // bundle curvature; tau != 0, kappa != 4 tau^2
};

using Tensor3 = std::array<std::array<std::array<double, 3>, 3>, 3>;
using Tensor4 = std::array<std::array<std::array<std::array<double, 3>, 3>, 3>, 3>;

// Invariant orthonormal frame model of the homogeneous 3-space fibering over
// a surface of curvature kappa: e1, e2 horizontal, e3 = xi the vertical
// Killing field, oriented so that e1 x e2 = e3.  All tensors are constant in
// this frame.
struct FrameModel {
  ModelParams params;
  // gamma[k][i][j] = <nabla_{e_i} e_j, e_k>
  Tensor3 gamma{};
  // brackets[k][i][j]: [e_i, e_j] = sum_k brackets[k][i][j] e_k
  Tensor3 brackets{};
  // riemann[l][i][j][k]: R(e_i, e_j) e_k = sum_l riemann[l][i][j][k] e_l
  // with R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y].
  Tensor4 riemann{};
  Eigen::Matrix3d ricci = Eigen::Matrix3d::Zero();
  double scalar = 0.0;
};

FrameModel build_frame_model(const ModelParams& p);

// max_k | nabla_{e_k} xi - tau e_k x xi |_inf; zero certifies the Killing
// rotation law of the vertical field.
double killing_field_residual(const FrameModel& m);

// The endomorphism X -> nabla_X xi in the frame (columns are images of e_k).
Eigen::Matrix3d vertical_derivative(const FrameModel& m);

// | A^2 + Id - eta (x) xi |_max with A = vertical_derivative; zero exactly
// when |tau| = 1 (the Sasakian normalization).
double sasaki_residual(const FrameModel& m);

// Exterior derivative of the invariant one-form c*eta as an antisymmetric
// matrix: d(c eta)(e_i, e_j) = -c * brackets[3][i][j].
Eigen::Matrix3d d_invariant_oneform(const FrameModel& m, double c);

struct RicciSpectrum {
  double horizontal = 0.0;  // eigenvalue on e1, e2: kappa - 2 tau^2
  double vertical = 0.0;    // eigenvalue on xi: 2 tau^2
};

RicciSpectrum ricci_spectrum(const FrameModel& m);

}  // namespace spinclab::homogeneous
