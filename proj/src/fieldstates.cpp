#include "qmlab/fieldstates.hpp"

#include <cmath>
#include <stdexcept>

namespace qmlab::fieldstates {

int CoherentState::effective_n_max() const {
  if (n_max >= 0) return n_max;
  const double a = std::abs(alpha);
  return (int)std::ceil(a * a + 8.0 * a + 20.0);
}

std::vector<std::complex<double>> coherent_amplitudes(const CoherentState& state) {
  if (state.omega <= 0.0)
    throw std::invalid_argument("coherent_amplitudes: omega must be positive");
  const int n_max = state.effective_n_max();
  std::vector<std::complex<double>> c(n_max + 1);
  c[0] = std::exp(-0.5 * std::norm(state.alpha));
  double total = std::norm(c[0]);
  for (int n = 1; n <= n_max; ++n) {
    c[n] = c[n - 1] * state.alpha / std::sqrt((double)n);
    total += std::norm(c[n]);
  }
  if (total < 1.0 - 1e-10)
    throw std::invalid_argument("coherent_amplitudes: truncation insufficient");
  return c;
}

CoherentState coherent_evolve(const CoherentState& state, double t) {
  CoherentState out = state;
  out.alpha = state.alpha * std::exp(std::complex<double>(0.0, -state.omega * t));
  return out;
}

Centroid coherent_centroid(const CoherentState& state) {
  return {std::sqrt(2.0 / state.omega) * state.alpha.real(),
          std::sqrt(2.0 * state.omega) * state.alpha.imag()};
}

std::complex<double> alpha_from_centroid(double q0, double p0, double omega) {
  return {std::sqrt(0.5 * omega) * q0, std::sqrt(0.5 / omega) * p0};
}

Uncertainties coherent_uncertainties(const CoherentState& state) {
  const double dq = std::sqrt(0.5 / state.omega);
  const double dp = std::sqrt(0.5 * state.omega);
  return {dq, dp, dq * dp};
}

Uncertainties number_state_uncertainties(int n, double omega) {
  if (n < 0) throw std::invalid_argument("number_state_uncertainties: n must be >= 0");
  const double dq = std::sqrt((2.0 * n + 1.0) / (2.0 * omega));
  const double dp = std::sqrt(omega * (2.0 * n + 1.0) / 2.0);
  return {dq, dp, dq * dp};
}

std::complex<double> overlap(std::complex<double> alpha, std::complex<double> beta) {
  return std::exp(-0.5 * std::norm(alpha) - 0.5 * std::norm(beta) +
                  std::conj(alpha) * beta);
}

FieldMoments coherent_field_moments(const CoherentState& state, double k_dot_r, double t) {
  // <E> = 2 |alpha| sin(omega t - k.r - phase) in vacuum-field units
  const double a = std::abs(state.alpha);
  const double phase = std::arg(state.alpha);
  return {2.0 * a * std::sin(state.omega * t - k_dot_r - phase), 1.0};
}

FieldMoments number_field_moments(int n) {
  if (n < 0) throw std::invalid_argument("number_field_moments: n must be >= 0");
  return {0.0, std::sqrt(2.0 * n + 1.0)};
}

double thermal_occupation(const ThermalMode& mode) {
  if (mode.temperature <= 0.0)
    throw std::invalid_argument("thermal_occupation: temperature must be positive");
  if (mode.omega <= 0.0)
    throw std::invalid_argument("thermal_occupation: omega must be positive");
  return 1.0 / std::expm1(mode.omega / mode.temperature);
}

double planck_density(double nu, double temperature) {
  if (temperature <= 0.0)
    throw std::invalid_argument("planck_density: temperature must be positive");
  if (nu <= 0.0) return 0.0;
  return nu * nu * nu / std::expm1(nu / temperature);
}

}  // namespace qmlab::fieldstates
