#include "spinclab/spinc.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "spinclab/errors.hpp"

using namespace spinclab;
using namespace spinclab::spinc;
using spinclab::homogeneous::build_frame_model;

namespace {

constexpr double kTol = 1e-12;
const cd kI{0.0, 1.0};

double max_abs(const Eigen::Matrix2cd& m) { return m.cwiseAbs().maxCoeff(); }

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

TEST_CASE("connection matrices at kappa = 4, tau = 0.5, canonical potential") {
  homogeneous::FrameModel m = build_frame_model({4.0, 0.5});
  Eigen::Vector3d aux = canonical_aux(m.params);
  CHECK((aux - Eigen::Vector3d(0, 0, 3)).norm() < kTol);
  CHECK((anti_canonical_aux(m.params) + aux).norm() < kTol);

  Connection conn = build_connection(m, aux);
  CHECK(max_abs(conn.M[0] - 0.25 * conn.rep.gamma[0]) < kTol);
  CHECK(max_abs(conn.M[1] - 0.25 * conn.rep.gamma[1]) < kTol);
  Eigen::Matrix2cd m3;
  m3 << cd(0, -0.25), 0, 0, cd(0, 3.25);  // 1.75 g_3 + 1.5 i Id
  CHECK(max_abs(conn.M[2] - m3) < kTol);

  CHECK(std::abs(conn.omega(0, 1) + 3.0) < kTol);
  CHECK(std::abs(conn.omega(1, 0) - 3.0) < kTol);
  for (int j = 0; j < 3; ++j) CHECK(std::abs(conn.omega(2, j)) < kTol);

  Eigen::Matrix2cd d = dirac_matrix(conn);
  Eigen::Matrix2cd d_expected;
  d_expected << -0.75, 0, 0, -3.75;
  CHECK(max_abs(d - d_expected) < kTol);
  CHECK(max_abs(d - d.adjoint()) < kTol);
}

TEST_CASE("invariant solutions of the spinor field equation") {
  for (const auto& p : random_params(9301, 12)) {
    homogeneous::FrameModel m = build_frame_model(p);
    double alpha = p.tau / 2.0;

    Connection canonical = build_connection(m, canonical_aux(p));
    KillingSolution sol = killing_solve(canonical, alpha);
    REQUIRE(sol.basis.size() == 1);
    CHECK(std::abs(sol.xi_eigenvalue - cd(0, -1)) < 1e-10);
    CHECK(sol.xi_residual < 1e-10);
    // the solution is an eigenvector of the invariant Dirac matrix
    Eigen::Matrix2cd d = dirac_matrix(canonical);
    CHECK((d * sol.basis[0] + 1.5 * p.tau * sol.basis[0]).norm() < 1e-10);

    Connection anti = build_connection(m, anti_canonical_aux(p));
    KillingSolution asol = killing_solve(anti, alpha);
    REQUIRE(asol.basis.size() == 1);
    CHECK(std::abs(asol.xi_eigenvalue - cd(0, 1)) < 1e-10);
    // mirror structure: same Dirac eigenvalue on the opposite vertical type
    CHECK((dirac_matrix(anti) * asol.basis[0] + 1.5 * p.tau * asol.basis[0])
              .norm() < 1e-10);
    // the complementary eigenvalue of the canonical Dirac matrix
    double other = p.tau / 2.0 - p.kappa / (2.0 * p.tau);
    Eigen::Vector2cd minus(0.0, 1.0);
    CHECK((d * minus - other * minus).norm() < 1e-10);

    // off the locus the solution space is trivial
    CHECK(killing_solve(canonical, alpha + 0.05).basis.empty());
    CHECK(killing_solve(canonical, -alpha).basis.empty());
    Eigen::Vector3d off = canonical_aux(p) + Eigen::Vector3d(0, 0, 0.2);
    CHECK(killing_solve(build_connection(m, off), alpha).basis.empty());
  }
}

TEST_CASE("curvature of the connection against the frame curvature") {
  for (const auto& p : random_params(9302, 12)) {
    homogeneous::FrameModel m = build_frame_model(p);
    std::mt19937 rng(9400);
    std::normal_distribution<double> dist;
    Eigen::Vector3d aux(dist(rng), dist(rng), dist(rng));
    Connection conn = build_connection(m, aux);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Eigen::Matrix2cd expected = Eigen::Matrix2cd::Zero();
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            expected += 0.25 * m.riemann[l][i][j][k] * conn.rep.gamma[k] *
                        conn.rep.gamma[l];
        expected += (kI / 2.0) * conn.omega(i, j) * Eigen::Matrix2cd::Identity();
        CHECK(max_abs(curvature(conn, i, j) - expected) < kTol);
      }
  }
}

TEST_CASE("contracted curvature and squared-operator identities") {
  std::mt19937 rng(9303);
  std::normal_distribution<double> dist;
  for (const auto& p : random_params(9304, 50)) {
    homogeneous::FrameModel m = build_frame_model(p);
    for (int variant = 0; variant < 3; ++variant) {
      Eigen::Vector3d aux;
      if (variant == 0) aux = canonical_aux(p);
      else if (variant == 1) aux = anti_canonical_aux(p);
      else aux = Eigen::Vector3d(dist(rng), dist(rng), dist(rng));
      Connection conn = build_connection(m, aux);
      CHECK(ricci_identity_residual(conn) < kTol);
      CHECK(lichnerowicz_residual(conn) < kTol);
    }
  }
}

TEST_CASE("vertical potential shift") {
  for (const auto& p : random_params(9305, 10)) {
    homogeneous::FrameModel m = build_frame_model(p);
    Connection conn = build_connection(m, canonical_aux(p));
    double c = 0.7;
    Connection shifted = deform(conn, c);
    // agrees with rebuilding from the shifted potential
    Connection rebuilt = build_connection(m, canonical_aux(p) + Eigen::Vector3d(0, 0, c));
    for (int k = 0; k < 3; ++k) CHECK(max_abs(shifted.M[k] - rebuilt.M[k]) < kTol);
    CHECK((shifted.omega - rebuilt.omega).cwiseAbs().maxCoeff() < kTol);
    // curvature gains the differential of the shifted form
    CHECK((shifted.omega - conn.omega - d_invariant_oneform(m, c))
              .cwiseAbs()
              .maxCoeff() < kTol);
    // Dirac matrix gains (i/2) c g_3: +c/2 on the canonical solution
    KillingSolution sol = killing_solve(conn, p.tau / 2.0);
    REQUIRE(sol.basis.size() == 1);
    Eigen::Vector2cd v = sol.basis[0];
    cd before = v.dot(dirac_matrix(conn) * v);
    cd after = v.dot(dirac_matrix(shifted) * v);
    CHECK(std::abs(after - before - c / 2.0) < 1e-10);
  }
}

TEST_CASE("sasakian normalization chain") {
  for (double tau : {1.0, -1.0}) {
    double kappa = 3.0;  // scal = 2 kappa - 2 = 4
    homogeneous::FrameModel m = build_frame_model({kappa, tau});
    double scal = m.scalar;
    CHECK(scal == doctest::Approx(4.0).epsilon(kTol));
    Connection conn = build_connection(m, canonical_aux(m.params));
    // canonical curvature satisfies omega12 = (6 - scal)/2
    CHECK(conn.omega(0, 1) == doctest::Approx(-(kappa - 4.0)).epsilon(kTol));
    CHECK(conn.omega(0, 1) == doctest::Approx((6.0 - scal) / 2.0).epsilon(kTol));
    // the shift (kappa - 4 tau^2)/(4 tau) lands on omega12' = -6 (kappa/4 - tau^2)
    double c0 = (kappa - 4.0 * tau * tau) / (4.0 * tau);
    Connection shifted = deform(conn, c0);
    CHECK(shifted.omega(0, 1) ==
          doctest::Approx(-6.0 * (kappa / 4.0 - tau * tau)).epsilon(kTol));
    CHECK(shifted.omega(0, 1) ==
          doctest::Approx(-6.0 * (scal - 6.0) / 8.0).epsilon(kTol));
  }
}

TEST_CASE("solver tolerances and edge cases") {
  homogeneous::FrameModel m = build_frame_model({4.0, 0.5});
  Connection conn = build_connection(m, canonical_aux(m.params));
  // basis vectors are unit
  KillingSolution sol = killing_solve(conn, 0.25);
  REQUIRE(sol.basis.size() == 1);
  CHECK(std::abs(sol.basis[0].norm() - 1.0) < kTol);
  // canonical potential at tau = 0 is undefined
  CHECK_THROWS_AS(canonical_aux({4.0, 0.0}), precondition_error);
}
