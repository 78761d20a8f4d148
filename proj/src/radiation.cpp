#include "qmlab/radiation.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qmlab/specfun.hpp"

namespace qmlab::radiation {

using cplx = std::complex<double>;
using specfun::clebsch_gordan;
using specfun::gaunt;
using specfun::ylm;

PolarizationBasis polarization_basis(double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  PolarizationBasis b;
  b.theta = theta;
  b.phi = phi;
  b.k_hat = {st * cp, st * sp, ct};
  b.lambda1 = {ct * cp, ct * sp, -st};
  b.lambda2 = {-sp, cp, 0.0};
  return b;
}

double e1_prefactor(double omega) { return omega * omega * omega / (8.0 * M_PI * M_PI); }

double e2_prefactor(double omega) {
  return std::pow(omega, 5) / (288.0 * M_PI * M_PI);
}

namespace {

const std::array<double, 3>& pol(const PolarizationBasis& b, int alpha) {
  if (alpha == 1) return b.lambda1;
  if (alpha == 2) return b.lambda2;
  throw std::invalid_argument("polarization index must be 1 or 2");
}

cplx dot(const Vec3c& v, const std::array<double, 3>& u) {
  return v[0] * u[0] + v[1] * u[1] + v[2] * u[2];
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// spherical components v_{+1}, v_0, v_{-1} of a real vector
cplx spherical_component(const std::array<double, 3>& v, int mu) {
  switch (mu) {
    case 1:
      return -cplx(v[0], v[1]) / std::sqrt(2.0);
    case 0:
      return cplx(v[2], 0.0);
    case -1:
      return cplx(v[0], -v[1]) / std::sqrt(2.0);
    default:
      throw std::invalid_argument("spherical_component: mu must be -1, 0, 1");
  }
}

void check_tensor(const Mat3c& q) {
  cplx trace = 0.0;
  for (int i = 0; i < 3; ++i) {
    trace += q[i][i];
    for (int j = 0; j < 3; ++j)
      if (std::abs(q[i][j] - q[j][i]) > 1e-12)
        throw std::invalid_argument("quadrupole tensor must be symmetric");
  }
  if (std::abs(trace) > 1e-12)
    throw std::invalid_argument("quadrupole tensor must be traceless");
}

}  // namespace

double dipole_pattern(const EmissionSpec& spec, double theta, double phi, int alpha) {
  if (spec.multipole != Multipole::E1)
    throw std::invalid_argument("dipole_pattern: spec is not an E1 transition");
  const auto b = polarization_basis(theta, phi);
  return std::norm(dot(spec.me_vector, pol(b, alpha)));
}

double dipole_rate(const EmissionSpec& spec, double theta, double phi, int alpha) {
  return e1_prefactor(spec.omega) * dipole_pattern(spec, theta, phi, alpha);
}

double quadrupole_pattern(const EmissionSpec& spec, double theta, double phi, int alpha) {
  if (spec.multipole != Multipole::E2)
    throw std::invalid_argument("quadrupole_pattern: spec is not an E2 transition");
  check_tensor(spec.me_tensor);
  const auto b = polarization_basis(theta, phi);
  const auto& lam = pol(b, alpha);
  cplx amp = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) amp += b.k_hat[i] * spec.me_tensor[i][j] * lam[j];
  return std::norm(amp);
}

double quadrupole_rate(const EmissionSpec& spec, double theta, double phi, int alpha) {
  return e2_prefactor(spec.omega) * quadrupole_pattern(spec, theta, phi, alpha);
}

double magnetic_dipole_pattern(const EmissionSpec& spec, double theta, double phi,
                               int alpha) {
  if (spec.multipole != Multipole::M1)
    throw std::invalid_argument("magnetic_dipole_pattern: spec is not an M1 transition");
  const auto b = polarization_basis(theta, phi);
  const auto kxl = cross(b.k_hat, pol(b, alpha));
  return std::norm(dot(spec.me_vector, kxl));
}

double magnetic_dipole_rate(const EmissionSpec& spec, double theta, double phi, int alpha) {
  return e1_prefactor(spec.omega) * magnetic_dipole_pattern(spec, theta, phi, alpha);
}

SelectionResult selection_rules(Multipole multipole, int l, int m, int parity_i, int lp,
                                int mp, int parity_f) {
  if (l < 0 || lp < 0 || std::abs(m) > l || std::abs(mp) > lp)
    throw std::invalid_argument("selection_rules: invalid quantum numbers");
  if (std::abs(parity_i) != 1 || std::abs(parity_f) != 1)
    throw std::invalid_argument("selection_rules: parities must be +-1");
  const int rank = multipole == Multipole::E2 ? 2 : 1;
  if (lp < std::abs(l - rank) || lp > l + rank)
    return {false, "angular momentum triangle with rank " + std::to_string(rank) + " fails"};
  if (std::abs(mp - m) > rank) return {false, "projection change exceeds the rank"};
  const bool parity_flips = parity_f != parity_i;
  if (multipole == Multipole::E1 && !parity_flips)
    return {false, "electric dipole requires a parity flip"};
  if (multipole != Multipole::E1 && parity_flips)
    return {false, "parity must be conserved"};
  return {true, "allowed"};
}

std::complex<double> angular_matrix_element(Multipole multipole, int l, int m, int lp,
                                            int mp) {
  const int mu = mp - m;
  switch (multipole) {
    case Multipole::E1:
      if (std::abs(mu) > 1) return 0.0;
      return gaunt(lp, mp, 1, mu, l, m);
    case Multipole::E2:
      if (std::abs(mu) > 2) return 0.0;
      return gaunt(lp, mp, 2, mu, l, m);
    case Multipole::M1: {
      // orbital angular momentum cannot change l; reduced element sqrt(l(l+1))
      if (lp != l || std::abs(mu) > 1 || l == 0) return 0.0;
      return std::sqrt(l * (l + 1.0)) *
             clebsch_gordan({2 * l, 2 * m}, {2, 2 * mu}, {2 * lp, 2 * mp});
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<WignerEckartEntry> wigner_eckart_expand(std::complex<double> reduced_me,
                                                    int twice_j, int twice_jp, int rank) {
  const int twice_rank = 2 * rank;
  if (twice_jp < std::abs(twice_j - twice_rank) || twice_jp > twice_j + twice_rank)
    throw std::invalid_argument("wigner_eckart_expand: triangle violation");
  std::vector<WignerEckartEntry> table;
  for (int tm = -twice_j; tm <= twice_j; tm += 2)
    for (int tmu = -twice_rank; tmu <= twice_rank; tmu += 2) {
      const int tmp = tm + tmu;
      if (std::abs(tmp) > twice_jp) continue;
      const double cg =
          clebsch_gordan({twice_rank, tmu}, {twice_j, tm}, {twice_jp, tmp});
      table.push_back({tm, tmu, tmp, cg * reduced_me});
    }
  return table;
}

// ---------------------------------------------------------------------------
// hydrogen

double hydrogen_radial_wf(int n, int l, double r) {
  if (n < 1 || n > 4 || l < 0 || l >= n)
    throw std::invalid_argument("hydrogen_radial_wf: supported range is n <= 4, l < n");
  const double x = r;
  switch (n * 10 + l) {
    case 10:
      return 2.0 * std::exp(-x);
    case 20:
      return (1.0 / (2.0 * std::sqrt(2.0))) * (2.0 - x) * std::exp(-0.5 * x);
    case 21:
      return (1.0 / (2.0 * std::sqrt(6.0))) * x * std::exp(-0.5 * x);
    case 30:
      return (2.0 / (3.0 * std::sqrt(3.0))) *
             (1.0 - 2.0 * x / 3.0 + 2.0 * x * x / 27.0) * std::exp(-x / 3.0);
    case 31:
      return (8.0 / (27.0 * std::sqrt(6.0))) * x * (1.0 - x / 6.0) * std::exp(-x / 3.0);
    case 32:
      return (4.0 / (81.0 * std::sqrt(30.0))) * x * x * std::exp(-x / 3.0);
    case 40:
      return 0.25 * (1.0 - 0.75 * x + x * x / 8.0 - x * x * x / 192.0) * std::exp(-0.25 * x);
    case 41:
      return (std::sqrt(5.0) / (16.0 * std::sqrt(3.0))) * x *
             (1.0 - 0.25 * x + x * x / 80.0) * std::exp(-0.25 * x);
    case 42:
      return (1.0 / (64.0 * std::sqrt(5.0))) * x * x * (1.0 - x / 12.0) * std::exp(-0.25 * x);
    case 43:
      return (1.0 / (768.0 * std::sqrt(35.0))) * x * x * x * std::exp(-0.25 * x);
  }
  throw std::logic_error("unreachable");
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  return adaptive_simpson(f, a, b, f(a), f(m), f(b), tol, 40);
}

}  // namespace

double hydrogen_radial_integral(int n, int l, int np, int lp) {
  auto f = [&](double r) {
    return hydrogen_radial_wf(np, lp, r) * r * hydrogen_radial_wf(n, l, r) * r * r;
  };
  return integrate(f, 0.0, 40.0, 1e-10);
}

std::complex<double> hydrogen_dipole_me(int n, int l, int m, int np, int lp, int mp) {
  if (n < 1 || n > 4 || np < 1 || np > 4)
    throw std::invalid_argument("hydrogen_dipole_me: supported range is n <= 4");
  if (l < 0 || l >= n || lp < 0 || lp >= np || std::abs(m) > l || std::abs(mp) > lp)
    throw std::invalid_argument("hydrogen_dipole_me: invalid quantum numbers");
  const auto sel = selection_rules(Multipole::E1, l, m, (l % 2) ? -1 : 1, lp, mp,
                                   (lp % 2) ? -1 : 1);
  if (!sel.allowed) return 0.0;
  const int mu = mp - m;
  return std::sqrt(4.0 * M_PI / 3.0) * hydrogen_radial_integral(n, l, np, lp) *
         gaunt(lp, mp, 1, mu, l, m);
}

InducedRates induced_and_absorption(double spontaneous_rate, double n_photons) {
  if (n_photons < 0.0)
    throw std::invalid_argument("induced_and_absorption: photon number must be >= 0");
  InducedRates r;
  r.induced = n_photons * spontaneous_rate;
  r.total = (n_photons + 1.0) * spontaneous_rate;
  r.absorption = r.induced;
  return r;
}

RecoilRatio recoil_ratio(double photon_energy, double rest_energy) {
  if (rest_energy <= 0.0)
    throw std::invalid_argument("recoil_ratio: rest energy must be positive");
  return {photon_energy / (2.0 * rest_energy), photon_energy / rest_energy};
}

std::complex<double> multipole_amplitude(int big_l, int big_m, int l, double theta,
                                         double phi, int alpha) {
  if (big_l != 0 && big_l != 1)
    throw std::invalid_argument("multipole_amplitude: only L = 0, 1 are implemented");
  if (std::abs(big_m) > big_l)
    throw std::invalid_argument("multipole_amplitude: |M| must be <= L");
  if (l < 0 || l < big_l - 1 || l > big_l + 1)
    throw std::invalid_argument("multipole_amplitude: l must be in {L-1, L, L+1}");
  const auto b = polarization_basis(theta, phi);
  const auto& lam = pol(b, alpha);
  cplx acc = 0.0;
  for (int q = -1; q <= 1; ++q) {
    const int m = big_m - q;
    if (std::abs(m) > l) continue;
    const double cg = clebsch_gordan({2 * l, 2 * m}, {2, 2 * q}, {2 * big_l, 2 * big_m});
    if (cg == 0.0) continue;
    acc += cg * ylm(l, m, theta, phi) * spherical_component(lam, q);
  }
  return acc;
}

}  // namespace qmlab::radiation
