#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace spinclab::berger {

// Largest admissible polynomial degree for spectral scans; overridable via
// the environment variable SPINC_LAB_KMAX_CEILING (default 8).
int degree_ceiling();

// Harmonic homogeneous polynomials of degree k on R^4, restricted to the
// 3-sphere.  Basis built by exact integer harmonic projection of the
// monomials with last-variable exponent <= 1, then L2(S^3) orthonormalized.
struct HarmonicSpace {
  int degree = 0;
  // exponent tuples of all degree-k monomials, in lexicographic order
  std::vector<std::array<int, 4>> monomials;
  // exact projection coefficients; basis_int[c] is column c over monomials
  std::vector<std::vector<long long>> basis_int;
  Eigen::MatrixXd basis;    // same data as double, monomials x dim
  Eigen::MatrixXd weights;  // L2(S^3) pairing of the monomials themselves
  Eigen::MatrixXd gram;     // pairing of the basis columns
  Eigen::MatrixXd ortho;    // orthonormalized coefficients, monomials x dim

  int dim() const { return static_cast<int>(basis.cols()); }
};

HarmonicSpace harmonic_basis(int k);

// Matrices, in the orthonormalized basis of H_k, of the three right-invariant
// rotation fields: index 0 and 1 are the horizontal frame directions, index 2
// the vertical (Hopf) direction, unscaled.  All are real antisymmetric and
// satisfy [E_0, E_1] = 2 E_2 and cyclic.
std::array<Eigen::MatrixXd, 3> frame_derivations(const HarmonicSpace& h);

// The vertical derivation alone (frame_derivations(h)[2]).
Eigen::MatrixXd hopf_operator(const HarmonicSpace& h);

struct TannoEntry {
  int p = 0;  // vertical weight label, k - 2p the weight
  double value = 0.0;
  int multiplicity = 0;
};

// Closed-form spectrum of the deformed Laplacian on H_k:
//   k(k+2) - (1 - tau^-2) (k - 2p)^2,
// multiplicity 2(k+1), halved when k = 2p.
std::vector<TannoEntry> tanno_eigenvalues(int k, double tau);

// Same spectrum from the assembled matrix k(k+2) Id - (1 - tau^-2) E_2^2,
// eigenvalues ascending with multiplicity.
Eigen::VectorXd tanno_assembled(const HarmonicSpace& h, double tau);

enum class Structure { canonical, induced };

// Dirac operator restricted to H_k (x) C^2 in the invariant trivialization:
//   A = sum_a E_a_scaled (x) g_a + Id (x) D0,
// with E_2 scaled by 1/tau; Hermitian in the orthonormalized basis.
Eigen::MatrixXcd dirac_block(const HarmonicSpace& h, double tau, Structure s);
Eigen::VectorXd dirac_block_eigenvalues(const HarmonicSpace& h, double tau,
                                        Structure s);

enum class Certainty {
  eigen_of_squared,  // value is a root of the squared-operator equation only
  realized,          // matched an eigenvalue of the assembled block
};

struct SpectrumEntry {
  int k = 0;
  int p = 0;
  int branch = +1;  // sign in -tau/2 +- sqrt(q)
  double value = 0.0;
  double q = 0.0;  // eigenvalue of (D + tau/2)^2 on the candidate subspace
  int multiplicity = 0;
  Structure structure = Structure::canonical;
  Certainty certainty = Certainty::eigen_of_squared;
};

// Candidate spectrum on the Berger spheres (kappa = 4, tau != 0, |tau| != 1):
// q = tanno + tau^2, value = -tau/2 +- sqrt(q), shifted by
// (1 - tau^2)/(2 tau) for the induced structure.  With witness = true each
// candidate is tagged realized when it matches an eigenvalue of the
// assembled block to 1e-8 relative.
std::vector<SpectrumEntry> dirac_spectrum(double tau, Structure s, int k_max,
                                          bool witness = true);

struct CompareRow {
  SpectrumEntry entry;
  double reference_value = 0.0;  // -tau/2 +- sqrt(2 + k(k+2) - (1 - tau^-2)(k - 2p))
  bool discrepant = false;
};

// Side-by-side of the computed candidates against an alternative display
// formula kept for reference; the two disagree for 0 < |tau| < 1 and the
// alternative is never substituted into results.
std::vector<CompareRow> dirac_spectrum_compare(double tau, Structure s,
                                               int k_max);

enum class Scan {
  confirmed,         // smallest positive realized value; falls back to the
                     // smallest positive candidate when none is realized
  candidates,        // smallest positive candidate, realized or not
  confirmed_strict,  // error when no positive realized value exists
};

struct FirstPositive {
  double value = 0.0;
  bool confirmed = false;
  SpectrumEntry entry;
};

FirstPositive first_positive_eigenvalue(double tau, Structure s, int k_max,
                                        Scan scan = Scan::confirmed);

}  // namespace spinclab::berger
