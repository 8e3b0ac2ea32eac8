#pragma once

#include <Eigen/Dense>

#include "spinclab/homogeneous.hpp"

namespace spinclab::geometry {

// Data of a compact oriented hypersurface inside a space carrying a rank-mu
// space of Killing spinors with constant alpha (alpha = 0: parallel).
struct HypersurfaceData {
  int n = 3;                  // hypersurface dimension
  double mean_curvature = 0.0;
  double killing_number = 0.0;  // alpha of the ambient spinors
  int parallel_rank = 1;        // mu
  double lambda1 = 0.0;         // first positive Dirac eigenvalue
  bool constant_mean_curvature = true;
};

struct BoundCheck {
  bool satisfied = false;
  double margin = 0.0;
  bool equality = false;  // |margin| < 1e-10
};

// lambda1 >= (n/2) H; requires H >= 0.
BoundCheck lower_bound_check(const HypersurfaceData& d);

// lambda1^2 <= n^2 alpha^2 + (n^2/4) H^2; requires constant H.
BoundCheck upper_bound_check(const HypersurfaceData& d);

enum class ShapeMode {
  corrected,      // vertical coefficient (4 tau^2 - kappa)/(4 tau); trace = 3H
  paper_literal,  // reference coefficient (4 tau^2 - kappa)/tau; trace != 3H
};

struct ImmersionData {
  double mean_curvature = 0.0;  // H = (kappa - 16 tau^2)/(12 tau)
  Eigen::Matrix3d shape_operator = Eigen::Matrix3d::Zero();
  double trace_mismatch = 0.0;  // trace - 3H, signed
};

// Shape data of the Berger sphere as a hypersurface with the given mean
// curvature convention; kappa > 16 tau^2 keeps H > 0 (pass allow_any_params
// to waive that hypothesis).
ImmersionData berger_immersion_data(const homogeneous::ModelParams& p,
                                    ShapeMode mode = ShapeMode::corrected,
                                    bool allow_any_params = false);

struct SasakiParams {
  double c = 0.0;             // vertical shift (scal - 6)/8
  double omega12_prime = 0.0; // shifted curvature -6c on e1^e2
};

// Potential shift realizing a Sasakian immersion target of scalar curvature
// scal (scal != 6, where the shift degenerates to zero curvature gain).
SasakiParams sasaki_immersion_params(double scal);

// Invariant surface data inside the homogeneous 3-space: umbilic with
// shape H*Id, vertical component f of xi along the normal and tangential
// part T, constrained by f^2 + |T|^2 = 1.  The induced connection form on
// the frame is omega12 = -(kappa - 4 tau^2) f.
struct SurfaceData {
  homogeneous::ModelParams params;
  Eigen::Matrix2d shape = Eigen::Matrix2d::Zero();
  double mean_curvature = 0.0;
  double f = 0.0;
  Eigen::Vector2d T = Eigen::Vector2d::Zero();
  double omega12 = 0.0;
};

// theta rotates T in the tangent frame: T = sqrt(1 - f^2) (cos, sin).
SurfaceData make_umbilic_surface(const homogeneous::ModelParams& p, double H,
                                 double f, double theta);

struct UmbilicResult {
  Eigen::Vector2d dH = Eigen::Vector2d::Zero();  // solved from the identity
  Eigen::Vector2d dH_closed_form = Eigen::Vector2d::Zero();  // -(kappa-4tau^2) f T
  double residual = 0.0;           // defect of the solved linear system
  bool constant_H_contradiction = false;  // dH forced nonzero
};

// Projects the curvature identity of the restricted spinor onto the spinor
// itself and solves the resulting 2x2 real system for dH.  A nonzero answer
// rules out constant mean curvature for this umbilic data.
UmbilicResult umbilic_obstruction(const SurfaceData& s);

}  // namespace spinclab::geometry
