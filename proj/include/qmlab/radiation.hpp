#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace qmlab::radiation {

enum class Multipole { E1, E2, M1 };

using Vec3c = std::array<std::complex<double>, 3>;
using Mat3c = std::array<std::array<std::complex<double>, 3>, 3>;

// Photon direction k(theta, phi) and the two linear polarizations:
// lambda1 along e_theta, lambda2 along e_phi; (lambda1, lambda2, k) is
// right-handed.
struct PolarizationBasis {
  double theta, phi;
  std::array<double, 3> k_hat;
  std::array<double, 3> lambda1;
  std::array<double, 3> lambda2;
};
PolarizationBasis polarization_basis(double theta, double phi);

// Transition data: frequency, multipole class, and the matrix element
// (vector for E1/M1, cartesian symmetric traceless tensor for E2).
struct EmissionSpec {
  double omega = 1.0;
  Multipole multipole = Multipole::E1;
  Vec3c me_vector = {};
  Mat3c me_tensor = {};
};

// Natural-units rate prefactors (hbar = c = eps0 = 1).
double e1_prefactor(double omega);  // omega^3 / 8 pi^2, also used for M1
double e2_prefactor(double omega);  // omega^5 / 288 pi^2

// Angular patterns |amplitude|^2 without the prefactor, and the full rates.
double dipole_pattern(const EmissionSpec& spec, double theta, double phi, int alpha);
double dipole_rate(const EmissionSpec& spec, double theta, double phi, int alpha);
double quadrupole_pattern(const EmissionSpec& spec, double theta, double phi, int alpha);
double quadrupole_rate(const EmissionSpec& spec, double theta, double phi, int alpha);
double magnetic_dipole_pattern(const EmissionSpec& spec, double theta, double phi,
                               int alpha);
double magnetic_dipole_rate(const EmissionSpec& spec, double theta, double phi, int alpha);

struct SelectionResult {
  bool allowed;
  std::string reason;  // names the violated rule when forbidden
};
// Parities are +-1.
SelectionResult selection_rules(Multipole multipole, int l, int m, int parity_i, int lp,
                                int mp, int parity_f);

// Angular factor of the matrix element <l' m'| T |l m> for orbital states,
// with the radial/reduced part set to one.  Exactly zero whenever the
// selection rules forbid the transition.
std::complex<double> angular_matrix_element(Multipole multipole, int l, int m, int lp,
                                            int mp);

struct WignerEckartEntry {
  int twice_m, twice_mu, twice_mp;
  std::complex<double> value;
};
// Full (2j+1)(2 rank+1) table from one reduced matrix element.
std::vector<WignerEckartEntry> wigner_eckart_expand(std::complex<double> reduced_me,
                                                    int twice_j, int twice_jp, int rank);

// Hydrogenic bound-state radial function (a0 = 1), closed-form for n <= 4.
double hydrogen_radial_wf(int n, int l, double r);
// integral of R_{n'l'} r R_{nl} r^2 dr on [0, 40], adaptive to 1e-10.
double hydrogen_radial_integral(int n, int l, int np, int lp);
// Spherical dipole component <n' l' m'|d_mu|n l m> with mu = m' - m.
std::complex<double> hydrogen_dipole_me(int n, int l, int m, int np, int lp, int mp);

struct InducedRates {
  double induced;
  double total;
  double absorption;
};
InducedRates induced_and_absorption(double spontaneous_rate, double n_photons);

struct RecoilRatio {
  double energy_ratio;    // recoil kinetic energy over photon energy
  double velocity_ratio;  // v_recoil / c
};
RecoilRatio recoil_ratio(double photon_energy, double rest_energy);

// Photon amplitude Phi_{LM,l} = sum_{m+q=M} <l m, 1 q|L M> Y_lm lambda_q
// for L in {0, 1}; vanishes identically for L = 0 (transversality).
std::complex<double> multipole_amplitude(int big_l, int big_m, int l, double theta,
                                         double phi, int alpha);

}  // namespace qmlab::radiation
