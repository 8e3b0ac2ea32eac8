#include "spinclab/geometry.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "spinclab/errors.hpp"
#include "spinclab/homogeneous.hpp"

using namespace spinclab;
using namespace spinclab::geometry;

namespace {

constexpr double kTol = 1e-12;

std::vector<homogeneous::ModelParams> random_params(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> tau_mag(0.2, 2.0);
  std::uniform_real_distribution<double> kappa_dist(-8.0, 8.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<homogeneous::ModelParams> out;
  while (static_cast<int>(out.size()) < count) {
    double tau = tau_mag(rng) * (coin(rng) ? 1.0 : -1.0);
    double kappa = kappa_dist(rng);
    if (std::abs(kappa - 4.0 * tau * tau) < 0.3) continue;
    out.push_back({kappa, tau});
  }
  return out;
}

}  // namespace

TEST_CASE("eigenvalue lower bound: equality cases and violations") {
  HypersurfaceData sphere;  // round unit 2-sphere in flat 3-space
  sphere.n = 2;
  sphere.mean_curvature = 1.0;
  sphere.killing_number = 0.0;
  sphere.parallel_rank = 2;
  sphere.lambda1 = 1.0;
  BoundCheck low = lower_bound_check(sphere);
  CHECK(low.satisfied);
  CHECK(low.equality);
  CHECK(std::abs(low.margin) < kTol);

  HypersurfaceData berger;  // Berger sphere inside the complex projective plane
  berger.n = 3;
  berger.mean_curvature = 1.4;
  berger.killing_number = 0.0;
  berger.parallel_rank = 1;
  berger.lambda1 = 2.1;
  BoundCheck blow = lower_bound_check(berger);
  CHECK(blow.satisfied);
  CHECK(blow.equality);
  CHECK(std::abs(blow.margin) < kTol);

  HypersurfaceData bad = berger;
  bad.lambda1 = 2.0;
  BoundCheck vlow = lower_bound_check(bad);
  CHECK(!vlow.satisfied);
  CHECK(!vlow.equality);
  CHECK(std::abs(vlow.margin + 0.1) < kTol);

  HypersurfaceData slack = berger;
  slack.lambda1 = 3.0;
  BoundCheck s = lower_bound_check(slack);
  CHECK(s.satisfied);
  CHECK(!s.equality);
  CHECK(std::abs(s.margin - 0.9) < kTol);

  HypersurfaceData negative = berger;
  negative.mean_curvature = -0.5;
  CHECK_THROWS_WITH_AS(lower_bound_check(negative),
                       doctest::Contains("nonnegative"), precondition_error);
}

TEST_CASE("eigenvalue upper bound: equality cases and violations") {
  HypersurfaceData sphere;
  sphere.n = 2;
  sphere.mean_curvature = 1.0;
  sphere.killing_number = 0.0;
  sphere.parallel_rank = 2;
  sphere.lambda1 = 1.0;
  BoundCheck up = upper_bound_check(sphere);
  CHECK(up.satisfied);
  CHECK(up.equality);

  HypersurfaceData berger;
  berger.n = 3;
  berger.mean_curvature = 1.4;
  berger.lambda1 = 2.1;
  BoundCheck bup = upper_bound_check(berger);
  CHECK(bup.satisfied);
  CHECK(bup.equality);
  CHECK(std::abs(bup.margin) < 1e-10);

  // ambient Killing number tau/2 widens the bound
  HypersurfaceData killing = berger;
  killing.killing_number = 0.25;
  BoundCheck kup = upper_bound_check(killing);
  CHECK(kup.satisfied);
  CHECK(!kup.equality);
  CHECK(std::abs(kup.margin - 9.0 * 0.0625) < kTol);

  HypersurfaceData violating = berger;
  violating.lambda1 = 2.3;
  BoundCheck vup = upper_bound_check(violating);
  CHECK(!vup.satisfied);
  CHECK(std::abs(vup.margin - (4.41 - 5.29)) < kTol);

  HypersurfaceData drifting = berger;
  drifting.constant_mean_curvature = false;
  CHECK_THROWS_WITH_AS(upper_bound_check(drifting),
                       doctest::Contains("constant"), precondition_error);
}

TEST_CASE("Berger immersion data: mean curvature and shape operator") {
  ImmersionData d = berger_immersion_data({4.0, 0.2});
  CHECK(std::abs(d.mean_curvature - 1.4) < kTol);
  Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
  expected.diagonal() << -0.2, -0.2, 4.6;
  CHECK((d.shape_operator - expected).cwiseAbs().maxCoeff() < kTol);
  CHECK(std::abs(d.trace_mismatch) < 1e-13);

  ImmersionData lit =
      berger_immersion_data({4.0, 0.2}, ShapeMode::paper_literal);
  Eigen::Matrix3d lit_expected = Eigen::Matrix3d::Zero();
  lit_expected.diagonal() << -0.2, -0.2, 19.0;
  CHECK((lit.shape_operator - lit_expected).cwiseAbs().maxCoeff() < kTol);
  CHECK(std::abs(lit.trace_mismatch - 14.4) < 1e-12);
  CHECK(std::abs(lit.mean_curvature - 1.4) < kTol);

  for (const auto& p : random_params(77, 100)) {
    if (!(p.kappa > 16.0 * p.tau * p.tau && p.tau > 0)) {
      CHECK_THROWS_AS(berger_immersion_data(p), precondition_error);
    }
    ImmersionData any = berger_immersion_data(p, ShapeMode::corrected, true);
    double h = (p.kappa - 16.0 * p.tau * p.tau) / (12.0 * p.tau);
    CHECK(std::abs(any.mean_curvature - h) < 1e-13 * (1.0 + std::abs(h)));
    CHECK(std::abs(any.trace_mismatch) < 1e-13 * (1.0 + std::abs(h)));
    CHECK(std::abs(any.shape_operator(0, 0) + p.tau) < kTol);
    CHECK(std::abs(any.shape_operator(1, 1) + p.tau) < kTol);

    ImmersionData any_lit =
        berger_immersion_data(p, ShapeMode::paper_literal, true);
    double mismatch = 3.0 * (p.kappa - 4.0 * p.tau * p.tau) / (4.0 * p.tau);
    CHECK(std::abs(any_lit.trace_mismatch - mismatch) <
          1e-12 * (1.0 + std::abs(mismatch)));
  }

  CHECK_THROWS_AS(berger_immersion_data({4.0, 0.0}), precondition_error);
  CHECK_THROWS_WITH_AS(berger_immersion_data({4.0, 0.6}),
                       doctest::Contains("16 tau^2"), precondition_error);
}

TEST_CASE("equality chain: first positive value meets the bound at kappa 4") {
  for (double tau : {0.1, 0.25, 0.45}) {
    ImmersionData d = berger_immersion_data({4.0, tau});
    HypersurfaceData hs;
    hs.n = 3;
    hs.mean_curvature = d.mean_curvature;
    hs.killing_number = 0.0;
    hs.parallel_rank = 1;
    hs.lambda1 = (1.0 - 4.0 * tau * tau) / (2.0 * tau);
    CHECK(std::abs(hs.lambda1 - 1.5 * d.mean_curvature) < 1e-12);
    CHECK(lower_bound_check(hs).equality);
    CHECK(upper_bound_check(hs).equality);
  }
}

TEST_CASE("Sasakian immersion parameters") {
  SasakiParams p = sasaki_immersion_params(10.0);
  CHECK(std::abs(p.c - 0.5) < kTol);
  CHECK(std::abs(p.omega12_prime + 3.0) < kTol);

  // scalar curvature of the unit-fiber model feeds the target curvature
  homogeneous::FrameModel m = homogeneous::build_frame_model({3.0, 1.0});
  SasakiParams q = sasaki_immersion_params(m.scalar);
  CHECK(std::abs(m.scalar - 4.0) < kTol);
  CHECK(std::abs(q.c - (3.0 / 4.0 - 1.0)) < kTol);
  CHECK(std::abs(q.omega12_prime - 1.5) < kTol);

  CHECK_THROWS_WITH_AS(sasaki_immersion_params(6.0),
                       doctest::Contains("Einstein"), precondition_error);
}

TEST_CASE("umbilic surfaces: construction invariants") {
  SurfaceData s = make_umbilic_surface({4.0, 0.5}, 1.0, 0.6, 0.0);
  CHECK(std::abs(s.f - 0.6) < kTol);
  CHECK(std::abs(s.T.norm() - 0.8) < kTol);
  CHECK(std::abs(s.f * s.f + s.T.squaredNorm() - 1.0) < kTol);
  CHECK(std::abs(s.omega12 + 3.0 * 0.6) < kTol);
  CHECK((s.shape - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < kTol);
  CHECK(s.mean_curvature == 1.0);

  SurfaceData r = make_umbilic_surface({4.0, 0.5}, 1.0, 0.6, 1.1);
  CHECK(std::abs(r.T(0) - 0.8 * std::cos(1.1)) < kTol);
  CHECK(std::abs(r.T(1) - 0.8 * std::sin(1.1)) < kTol);

  CHECK_THROWS_AS(make_umbilic_surface({4.0, 0.5}, 1.0, 1.2, 0.0),
                  precondition_error);
  CHECK_THROWS_AS(make_umbilic_surface({4.0, 0.0}, 1.0, 0.5, 0.0),
                  precondition_error);
  CHECK_THROWS_AS(make_umbilic_surface({1.0, 0.5}, 1.0, 0.5, 0.0),
                  precondition_error);
}

TEST_CASE("umbilic obstruction: solved gradient matches the closed form") {
  SurfaceData s = make_umbilic_surface({4.0, 0.5}, 1.0, 0.6, 0.0);
  UmbilicResult u = umbilic_obstruction(s);
  CHECK(std::abs(u.dH(0) + 1.44) < 1e-10);
  CHECK(std::abs(u.dH(1)) < 1e-10);
  CHECK((u.dH - u.dH_closed_form).norm() < 1e-10);
  CHECK(u.residual < 1e-10);
  CHECK(u.constant_H_contradiction);
  CHECK(std::abs(u.dH.norm() - 3.0 * 0.6 * 0.8) < 1e-10);

  // the solved gradient does not depend on the assumed mean curvature
  for (double h : {0.0, 1.0, 7.5}) {
    SurfaceData v = make_umbilic_surface({4.0, 0.5}, h, 0.6, 0.0);
    UmbilicResult w = umbilic_obstruction(v);
    CHECK((w.dH - u.dH).norm() < 1e-10);
  }

  // frame covariance: swapping the tangent components swaps the answer
  SurfaceData flipped = s;
  std::swap(flipped.T(0), flipped.T(1));
  UmbilicResult uf = umbilic_obstruction(flipped);
  CHECK(std::abs(uf.dH(0) - u.dH(1)) < 1e-10);
  CHECK(std::abs(uf.dH(1) - u.dH(0)) < 1e-10);

  // horizontal normal: no vertical component, no obstruction
  SurfaceData flat = make_umbilic_surface({4.0, 0.5}, 2.0, 0.0, 0.3);
  UmbilicResult uz = umbilic_obstruction(flat);
  CHECK(uz.dH.norm() < 1e-10);
  CHECK(!uz.constant_H_contradiction);

  // fully vertical normal: T = 0 and both branches of the pole
  for (double f : {1.0, -1.0}) {
    SurfaceData polar = make_umbilic_surface({4.0, 0.5}, 1.0, f, 0.0);
    UmbilicResult up = umbilic_obstruction(polar);
    CHECK(up.dH.norm() < 1e-10);
    CHECK(!up.constant_H_contradiction);
  }

  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> fdist(-0.99, 0.99);
  std::uniform_real_distribution<double> tdist(0.0, 6.28318530717958648);
  std::uniform_real_distribution<double> hdist(-2.0, 2.0);
  auto params = random_params(91, 50);
  for (const auto& p : params) {
    double f = fdist(rng);
    double theta = tdist(rng);
    SurfaceData w = make_umbilic_surface(p, hdist(rng), f, theta);
    UmbilicResult res = umbilic_obstruction(w);
    Eigen::Vector2d closed =
        -(p.kappa - 4.0 * p.tau * p.tau) * f * w.T;
    CHECK((res.dH - closed).norm() < 1e-10 * (1.0 + closed.norm()));
    CHECK((res.dH_closed_form - closed).norm() <
          1e-12 * (1.0 + closed.norm()));
    CHECK(res.residual < 1e-10 * (1.0 + closed.norm()));
    CHECK(res.constant_H_contradiction == (closed.norm() > 1e-10));
  }

  SurfaceData bent = s;
  bent.shape(0, 1) = bent.shape(1, 0) = 0.2;
  CHECK_THROWS_WITH_AS(umbilic_obstruction(bent), doctest::Contains("umbilic"),
                       precondition_error);
  SurfaceData torn = s;
  torn.f = 0.9;  // breaks f^2 + |T|^2 = 1
  CHECK_THROWS_AS(umbilic_obstruction(torn), precondition_error);
  SurfaceData skewed = s;
  skewed.omega12 = 0.0;  // breaks the connection-form invariant
  CHECK_THROWS_AS(umbilic_obstruction(skewed), precondition_error);
}
