#pragma once

#include <complex>
#include <vector>

namespace qmlab::fieldstates {

// Coherent state |alpha> of a single mode, hbar = 1.
struct CoherentState {
  std::complex<double> alpha;
  double omega = 1.0;
  int n_max = -1;  // negative: use the default truncation rule

  int effective_n_max() const;
};

struct ThermalMode {
  double omega = 1.0;
  double temperature = 1.0;  // k_B = 1
};

// Number-state amplitudes c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!).
// Throws if the truncation fails the 1 - 1e-10 normalization bound.
std::vector<std::complex<double>> coherent_amplitudes(const CoherentState& state);

// alpha(t) = alpha exp(-i omega t).
CoherentState coherent_evolve(const CoherentState& state, double t);

// Phase-space centroid (q0, p0) of |alpha>.
struct Centroid {
  double q0, p0;
};
Centroid coherent_centroid(const CoherentState& state);
// alpha recovered from (q0, p0) at frequency omega.
std::complex<double> alpha_from_centroid(double q0, double p0, double omega);

struct Uncertainties {
  double dq, dp, product;
};
Uncertainties coherent_uncertainties(const CoherentState& state);
Uncertainties number_state_uncertainties(int n, double omega);

// <alpha|beta> for two coherent states of the same mode.
std::complex<double> overlap(std::complex<double> alpha, std::complex<double> beta);

// Single-mode electric-field statistics at phase k.r, time t, in units of
// the vacuum field scale.
struct FieldMoments {
  double mean;
  double fluctuation;
};
FieldMoments coherent_field_moments(const CoherentState& state, double k_dot_r, double t);
FieldMoments number_field_moments(int n);

double thermal_occupation(const ThermalMode& mode);
// Spectral energy density, proportional to nu^3 / (exp(h nu / T) - 1) with
// h = k_B = 1.
double planck_density(double nu, double temperature);

}  // namespace qmlab::fieldstates
