#include "spinclab/geometry.hpp"

#include <cmath>
#include <complex>

#include "spinclab/clifford.hpp"
#include "spinclab/errors.hpp"

namespace spinclab::geometry {

namespace {

constexpr double kEqualityTol = 1e-10;

using clifford::cd;

void check_dimension(const HypersurfaceData& d) {
  if (d.n < 2) throw precondition_error("hypersurface dimension must be >= 2");
  if (d.parallel_rank < 0)
    throw precondition_error("spinor space rank must be nonnegative");
}

}  // namespace

BoundCheck lower_bound_check(const HypersurfaceData& d) {
  check_dimension(d);
  if (d.mean_curvature < 0.0)
    throw precondition_error(
        "lower bound assumes nonnegative mean curvature");
  BoundCheck out;
  out.margin = d.lambda1 - 0.5 * d.n * d.mean_curvature;
  out.equality = std::abs(out.margin) < kEqualityTol;
  out.satisfied = out.margin > -kEqualityTol;
  return out;
}

BoundCheck upper_bound_check(const HypersurfaceData& d) {
  check_dimension(d);
  if (!d.constant_mean_curvature)
    throw precondition_error(
        "upper bound applies to constant mean curvature data only");
  double n2 = double(d.n) * double(d.n);
  double bound = n2 * d.killing_number * d.killing_number +
                 0.25 * n2 * d.mean_curvature * d.mean_curvature;
  BoundCheck out;
  out.margin = bound - d.lambda1 * d.lambda1;
  out.equality = std::abs(out.margin) < kEqualityTol;
  out.satisfied = out.margin > -kEqualityTol;
  return out;
}

ImmersionData berger_immersion_data(const homogeneous::ModelParams& p,
                                    ShapeMode mode, bool allow_any_params) {
  if (p.tau == 0.0 || std::isnan(p.tau) || std::isnan(p.kappa))
    throw precondition_error("tau != 0 required for the fibration normal");
  if (!allow_any_params &&
      !(p.kappa > 16.0 * p.tau * p.tau && p.tau > 0.0))
    throw precondition_error(
        "positive mean curvature needs kappa > 16 tau^2 and tau > 0 "
        "(pass allow_any_params to waive)");

  ImmersionData out;
  out.mean_curvature = (p.kappa - 16.0 * p.tau * p.tau) / (12.0 * p.tau);
  double divisor = (mode == ShapeMode::corrected) ? 4.0 * p.tau : p.tau;
  double vertical = (4.0 * p.tau * p.tau - p.kappa) / divisor;
  out.shape_operator = -p.tau * Eigen::Matrix3d::Identity();
  out.shape_operator(2, 2) -= vertical;
  out.trace_mismatch =
      out.shape_operator.trace() - 3.0 * out.mean_curvature;
  return out;
}

SasakiParams sasaki_immersion_params(double scal) {
  if (std::abs(scal - 6.0) == 0.0)
    throw precondition_error(
        "scalar curvature 6 is the excluded Einstein case");
  if (std::isnan(scal)) throw precondition_error("scalar curvature is NaN");
  SasakiParams out;
  out.c = (scal - 6.0) / 8.0;
  out.omega12_prime = -6.0 * out.c;
  return out;
}

SurfaceData make_umbilic_surface(const homogeneous::ModelParams& p, double H,
                                 double f, double theta) {
  homogeneous::build_frame_model(p);  // validates the parameter domain
  if (!(f >= -1.0 && f <= 1.0))
    throw precondition_error("normal vertical component must lie in [-1, 1]");
  SurfaceData s;
  s.params = p;
  s.shape = H * Eigen::Matrix2d::Identity();
  s.mean_curvature = H;
  s.f = f;
  double t = std::sqrt(std::max(0.0, 1.0 - f * f));
  s.T = Eigen::Vector2d(t * std::cos(theta), t * std::sin(theta));
  s.omega12 = -(p.kappa - 4.0 * p.tau * p.tau) * f;
  return s;
}

UmbilicResult umbilic_obstruction(const SurfaceData& s) {
  double H = 0.5 * s.shape.trace();
  if ((s.shape - H * Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() >
      1e-12)
    throw precondition_error("shape operator is not umbilic");
  if (std::abs(s.f * s.f + s.T.squaredNorm() - 1.0) > 1e-10)
    throw precondition_error("f^2 + |T|^2 = 1 violated");
  double curv = s.params.kappa - 4.0 * s.params.tau * s.params.tau;
  if (std::abs(s.omega12 + curv * s.f) > 1e-10)
    throw precondition_error("omega12 must equal -(kappa - 4 tau^2) f");

  // unit spinor encoding (f, T): |top|^2 - |bottom|^2 = f and the tangential
  // pairings return the components of T; branch on the sign of f to avoid
  // the vanishing amplitude at the poles
  cd a, b;
  if (s.f >= 0.0) {
    double amp = std::sqrt((1.0 + s.f) / 2.0);
    a = amp;
    b = cd(-s.T(1), s.T(0)) / (2.0 * amp);
  } else {
    double amp = std::sqrt((1.0 - s.f) / 2.0);
    b = amp;
    a = cd(-s.T(1), -s.T(0)) / (2.0 * amp);
  }
  Eigen::Vector2cd phi(a, b);

  // curvature identity projected on the spinor: the gradient components are
  // the unknowns of  -(1/2) J(dH) . phi = (i/2) curv (f^2 vol - f) phi,
  // where vol is the surface volume action; solved as a real least-squares
  // system, exact when the surface data is consistent
  clifford::Rep rep = clifford::build_rep(2);
  Eigen::Vector2cd col1 = -0.5 * (rep.gamma[1] * phi);
  Eigen::Vector2cd col2 = 0.5 * (rep.gamma[0] * phi);
  Eigen::Vector2cd vol_phi(phi(0), -phi(1));
  Eigen::Vector2cd rhs =
      cd(0, 0.5) * curv * (s.f * s.f * vol_phi - s.f * phi);

  Eigen::MatrixXd system(4, 2);
  Eigen::VectorXd target(4);
  for (int i = 0; i < 2; ++i) {
    system(i, 0) = col1(i).real();
    system(i, 1) = col2(i).real();
    system(2 + i, 0) = col1(i).imag();
    system(2 + i, 1) = col2(i).imag();
    target(i) = rhs(i).real();
    target(2 + i) = rhs(i).imag();
  }

  UmbilicResult out;
  out.dH = system.colPivHouseholderQr().solve(target);
  out.residual = (system * out.dH - target).norm();
  out.dH_closed_form = -curv * s.f * s.T;
  out.constant_H_contradiction = out.dH_closed_form.norm() > 1e-10;
  return out;
}

}  // namespace spinclab::geometry
