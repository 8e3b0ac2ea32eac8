#include "spinclab/berger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>

#include "spinclab/clifford.hpp"
#include "spinclab/errors.hpp"
#include "spinclab/homogeneous.hpp"
#include "spinclab/spinc.hpp"

namespace spinclab::berger {

namespace {

using Exponents = std::array<int, 4>;
using IntPoly = std::map<Exponents, __int128>;

constexpr int kDefaultCeiling = 8;
// exact integer projection overflows long long past this degree
constexpr int kExactDegreeLimit = 12;

// normalized moment of a monomial over the 3-sphere: zero unless every
// exponent is even, otherwise prod (2b_i - 1)!! / (2^B (B+1)!) with
// b_i = a_i / 2 and B their sum; the total measure is 1
double sphere_moment(const Exponents& a) {
  int total_half = 0;
  long double value = 1.0L;
  for (int i = 0; i < 4; ++i) {
    if (a[i] % 2 != 0) return 0.0;
    int b = a[i] / 2;
    total_half += b;
    for (int j = 1; j <= b; ++j) value *= 2 * j - 1;
  }
  value = std::ldexp(value, -total_half);
  for (int j = 2; j <= total_half + 1; ++j) value /= j;
  return static_cast<double>(value);
}

std::vector<Exponents> degree_monomials(int k) {
  std::vector<Exponents> out;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; a + b <= k; ++b)
      for (int c = 0; a + b + c <= k; ++c)
        out.push_back({a, b, c, k - a - b - c});
  return out;
}

IntPoly laplacian(const IntPoly& poly) {
  IntPoly out;
  for (const auto& [e, coeff] : poly) {
    for (int v = 0; v < 4; ++v) {
      if (e[v] < 2) continue;
      Exponents d = e;
      d[v] -= 2;
      out[d] += coeff * e[v] * (e[v] - 1);
    }
  }
  return out;
}

IntPoly radius_squared_times(const IntPoly& poly) {
  IntPoly out;
  for (const auto& [e, coeff] : poly) {
    for (int v = 0; v < 4; ++v) {
      Exponents d = e;
      d[v] += 2;
      out[d] += coeff;
    }
  }
  return out;
}

long long narrow(__int128 value) {
  if (value > std::numeric_limits<long long>::max() ||
      value < std::numeric_limits<long long>::min())
    throw precondition_error(
        "harmonic projection coefficients exceed exact integer range; "
        "lower the degree");
  return static_cast<long long>(value);
}

// one term per summand of a rotation field: coeff * x_mult * d/dx_diff
struct FieldTerm {
  int coeff;
  int mult;
  int diff;
};

using Field = std::array<FieldTerm, 4>;

// right-invariant rotation fields on the 3-sphere; index 2 is the Hopf
// field x d/dy - y d/dx + z d/dw - w d/dz, indices 0 and 1 two conjugates
// completing the bracket relations [E_a, E_{a+1}] = 2 E_{a+2}
constexpr std::array<Field, 3> kRotationFields = {{
    {{{-1, 3, 0}, {-1, 2, 1}, {1, 1, 2}, {1, 0, 3}}},
    {{{-1, 2, 0}, {1, 3, 1}, {1, 0, 2}, {-1, 1, 3}}},
    {{{-1, 1, 0}, {1, 0, 1}, {-1, 3, 2}, {1, 2, 3}}},
}};

Eigen::MatrixXd monomial_field_matrix(
    const std::vector<Exponents>& monomials,
    const std::map<Exponents, int>& index, const Field& field) {
  int n = static_cast<int>(monomials.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const Exponents& e = monomials[j];
    for (const FieldTerm& t : field) {
      if (e[t.diff] == 0) continue;
      Exponents d = e;
      d[t.diff] -= 1;
      d[t.mult] += 1;
      out(index.at(d), j) += t.coeff * e[t.diff];
    }
  }
  return out;
}

double induced_shift(double tau) { return (1.0 - tau * tau) / (2.0 * tau); }

void check_berger_tau(double tau) {
  if (!(std::abs(tau) > 0.0 && std::abs(tau) < 1.0) || std::isnan(tau))
    throw precondition_error(
        "Berger spectra require 0 < |tau| < 1 (kappa normalized to 4)");
}

}  // namespace

int degree_ceiling() {
  const char* raw = std::getenv("SPINC_LAB_KMAX_CEILING");
  if (raw == nullptr) return kDefaultCeiling;
  char* end = nullptr;
  long parsed = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed <= 0) return kDefaultCeiling;
  return static_cast<int>(std::min<long>(parsed, kExactDegreeLimit));
}

HarmonicSpace harmonic_basis(int k) {
  int ceiling = degree_ceiling();
  if (k < 0 || k > ceiling)
    throw precondition_error(
        "degree must lie in 0.." + std::to_string(ceiling) +
        " (adjust SPINC_LAB_KMAX_CEILING to widen)");

  HarmonicSpace h;
  h.degree = k;
  h.monomials = degree_monomials(k);
  int n = static_cast<int>(h.monomials.size());
  std::map<Exponents, int> index;
  for (int i = 0; i < n; ++i) index[h.monomials[i]] = i;

  // projection sum_j s_j r^{2j} Lap^j with the integer scale
  // s_0 = 4^J J! k!/(k-J)!, s_{j+1} = -s_j / (4 (j+1) (k-j)), J = floor(k/2)
  int big_j = k / 2;
  std::vector<__int128> scale(big_j + 1);
  scale[0] = 1;
  for (int i = 0; i < big_j; ++i) scale[0] *= 4 * (i + 1) * (k - i);
  for (int j = 0; j < big_j; ++j)
    scale[j + 1] = -scale[j] / (4 * (j + 1) * (k - j));

  int dim = (k + 1) * (k + 1);
  h.basis_int.reserve(dim);
  h.basis = Eigen::MatrixXd::Zero(n, dim);
  int col = 0;
  for (const Exponents& seed : h.monomials) {
    if (seed[3] > 1) continue;
    IntPoly total{{seed, scale[0]}};
    IntPoly power{{seed, 1}};
    for (int j = 1; j <= big_j; ++j) {
      power = laplacian(power);
      IntPoly term = power;
      for (int r = 0; r < j; ++r) term = radius_squared_times(term);
      for (const auto& [e, c] : term) total[e] += scale[j] * c;
    }
    for (const auto& [e, c] : laplacian(total))
      if (c != 0)
        throw internal_error("harmonic projection failed to annihilate");

    std::vector<long long> column(n, 0);
    for (const auto& [e, c] : total) column[index.at(e)] = narrow(c);
    for (int i = 0; i < n; ++i) h.basis(i, col) = double(column[i]);
    h.basis_int.push_back(std::move(column));
    ++col;
  }
  if (col != dim) throw internal_error("harmonic seed count mismatch");

  h.weights = Eigen::MatrixXd(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Exponents sum;
      for (int v = 0; v < 4; ++v) sum[v] = h.monomials[i][v] + h.monomials[j][v];
      h.weights(i, j) = h.weights(j, i) = sphere_moment(sum);
    }

  h.gram = h.basis.transpose() * h.weights * h.basis;
  Eigen::LLT<Eigen::MatrixXd> llt(h.gram);
  if (llt.info() != Eigen::Success)
    throw internal_error("harmonic gram matrix not positive definite");
  Eigen::MatrixXd solved = llt.matrixL().solve(h.basis.transpose());
  h.ortho = solved.transpose();
  return h;
}

std::array<Eigen::MatrixXd, 3> frame_derivations(const HarmonicSpace& h) {
  std::map<Exponents, int> index;
  for (size_t i = 0; i < h.monomials.size(); ++i)
    index[h.monomials[i]] = static_cast<int>(i);
  std::array<Eigen::MatrixXd, 3> out;
  for (int a = 0; a < 3; ++a) {
    Eigen::MatrixXd x =
        monomial_field_matrix(h.monomials, index, kRotationFields[a]);
    out[a] = h.ortho.transpose() * h.weights * (x * h.ortho);
  }
  return out;
}

Eigen::MatrixXd hopf_operator(const HarmonicSpace& h) {
  return frame_derivations(h)[2];
}

std::vector<TannoEntry> tanno_eigenvalues(int k, double tau) {
  if (k < 0) throw precondition_error("degree must be nonnegative");
  if (tau == 0.0 || std::isnan(tau))
    throw precondition_error("tau != 0 required for the deformed Laplacian");
  double deform = 1.0 - 1.0 / (tau * tau);
  std::vector<TannoEntry> out;
  for (int p = 0; p <= k / 2; ++p) {
    int weight = k - 2 * p;
    TannoEntry e;
    e.p = p;
    e.value = double(k * (k + 2)) - deform * double(weight * weight);
    e.multiplicity = (weight == 0) ? (k + 1) : 2 * (k + 1);
    out.push_back(e);
  }
  return out;
}

Eigen::VectorXd tanno_assembled(const HarmonicSpace& h, double tau) {
  if (tau == 0.0 || std::isnan(tau))
    throw precondition_error("tau != 0 required for the deformed Laplacian");
  int k = h.degree;
  int n = h.dim();
  Eigen::MatrixXd xi = hopf_operator(h);
  Eigen::MatrixXd m = double(k * (k + 2)) * Eigen::MatrixXd::Identity(n, n) +
                      (1.0 - 1.0 / (tau * tau)) * (xi * xi);
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
}

Eigen::MatrixXcd dirac_block(const HarmonicSpace& h, double tau, Structure s) {
  if (tau == 0.0 || std::isnan(tau))
    throw precondition_error("tau != 0 required for the Dirac block");
  homogeneous::FrameModel model = homogeneous::build_frame_model({4.0, tau});
  clifford::Rep rep = clifford::build_rep(3);
  spinc::Connection conn =
      spinc::build_connection(model, spinc::canonical_aux(model.params));
  if (s == Structure::induced)
    conn = spinc::deform(conn, (1.0 - tau * tau) / tau);
  Eigen::Matrix2cd d0 = spinc::dirac_matrix(conn);

  auto e = frame_derivations(h);
  e[2] /= tau;
  int n = h.dim();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    a.block<2, 2>(2 * i, 2 * i) = d0;
    for (int j = 0; j < n; ++j)
      for (int f = 0; f < 3; ++f)
        if (e[f](i, j) != 0.0)
          a.block<2, 2>(2 * i, 2 * j) += e[f](i, j) * rep.gamma[f];
  }
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw internal_error("Dirac block lost Hermitian symmetry");
  return a;
}

Eigen::VectorXd dirac_block_eigenvalues(const HarmonicSpace& h, double tau,
                                        Structure s) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(dirac_block(h, tau, s))
      .eigenvalues();
}

std::vector<SpectrumEntry> dirac_spectrum(double tau, Structure s, int k_max,
                                          bool witness) {
  check_berger_tau(tau);
  if (k_max < 0 || k_max > degree_ceiling())
    throw precondition_error(
        "k_max must lie in 0.." + std::to_string(degree_ceiling()) +
        " (adjust SPINC_LAB_KMAX_CEILING to widen)");

  double shift = (s == Structure::induced) ? induced_shift(tau) : 0.0;
  std::vector<SpectrumEntry> out;
  for (int k = 0; k <= k_max; ++k) {
    std::vector<SpectrumEntry> block;
    for (const TannoEntry& t : tanno_eigenvalues(k, tau)) {
      double q = t.value + tau * tau;
      if (!(q > 0.0))
        throw internal_error("squared-operator eigenvalue not positive");
      for (int branch : {+1, -1}) {
        SpectrumEntry e;
        e.k = k;
        e.p = t.p;
        e.branch = branch;
        e.q = q;
        e.value = -0.5 * tau + branch * std::sqrt(q) + shift;
        e.multiplicity = t.multiplicity;
        e.structure = s;
        e.certainty = Certainty::eigen_of_squared;
        block.push_back(e);
      }
    }
    if (witness) {
      Eigen::VectorXd eigs =
          dirac_block_eigenvalues(harmonic_basis(k), tau, s);
      for (SpectrumEntry& e : block) {
        double best = std::numeric_limits<double>::infinity();
        for (long i = 0; i < eigs.size(); ++i)
          best = std::min(best, std::abs(eigs(i) - e.value));
        if (best <= 1e-8 * (1.0 + std::abs(e.value)))
          e.certainty = Certainty::realized;
      }
    }
    std::stable_sort(block.begin(), block.end(),
                     [](const SpectrumEntry& x, const SpectrumEntry& y) {
                       return x.value < y.value;
                     });
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<CompareRow> dirac_spectrum_compare(double tau, Structure s,
                                               int k_max) {
  std::vector<CompareRow> rows;
  double shift = (s == Structure::induced) ? induced_shift(tau) : 0.0;
  for (const SpectrumEntry& e : dirac_spectrum(tau, s, k_max)) {
    CompareRow r;
    r.entry = e;
    double radicand = 2.0 + double(e.k * (e.k + 2)) -
                      (1.0 - 1.0 / (tau * tau)) * double(e.k - 2 * e.p);
    if (!(radicand > 0.0))
      throw internal_error("reference display radicand not positive");
    r.reference_value = -0.5 * tau + e.branch * std::sqrt(radicand) + shift;
    r.discrepant = std::abs(r.reference_value - e.value) > 1e-9;
    rows.push_back(r);
  }
  return rows;
}

FirstPositive first_positive_eigenvalue(double tau, Structure s, int k_max,
                                        Scan scan) {
  std::vector<SpectrumEntry> entries = dirac_spectrum(tau, s, k_max, true);
  const SpectrumEntry* best_realized = nullptr;
  const SpectrumEntry* best_any = nullptr;
  for (const SpectrumEntry& e : entries) {
    if (e.value <= 1e-12) continue;
    if (best_any == nullptr || e.value < best_any->value) best_any = &e;
    if (e.certainty == Certainty::realized &&
        (best_realized == nullptr || e.value < best_realized->value))
      best_realized = &e;
  }

  const SpectrumEntry* pick = nullptr;
  switch (scan) {
    case Scan::confirmed:
      pick = best_realized != nullptr ? best_realized : best_any;
      break;
    case Scan::candidates:
      pick = best_any;
      break;
    case Scan::confirmed_strict:
      pick = best_realized;
      break;
  }
  if (pick == nullptr)
    throw precondition_error(
        "no positive spectrum value found; raise k_max and rescan");

  FirstPositive fp;
  fp.value = pick->value;
  fp.confirmed = pick->certainty == Certainty::realized;
  fp.entry = *pick;
  return fp;
}

}  // namespace spinclab::berger
