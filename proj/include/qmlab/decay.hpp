#pragma once

#include <complex>
#include <vector>

namespace qmlab::decay {

struct ContinuumLevel {
  double energy;
  std::complex<double> coupling;  // V_{0 mu}
};

// Discrete level at e0 coupled to a discretized continuum.  Continuum
// energies must be strictly increasing and uniformly spaced; couplings
// between continuum levels are absent by construction.
struct DecayProblem {
  double e0 = 0.0;
  std::vector<ContinuumLevel> continuum;
  bool include_continuum_coupling = false;  // must stay false

  void validate() const;
  double spacing() const;  // uniform level spacing delta
  double density() const { return 1.0 / spacing(); }
  double bandwidth() const;
  double coupling_norm2() const;  // sum |V|^2
};

// Uniform band of `levels` states across `bandwidth` centered on e0 with
// constant coupling.
DecayProblem flat_band(double e0, int levels, double bandwidth, double coupling);
// Same grid with a Gaussian coupling profile peaked at e0.
DecayProblem gaussian_band(double e0, int levels, double bandwidth, double peak_coupling,
                           double profile_width);

// Dense bordered Hamiltonian, row/column 0 is the discrete level.
std::vector<std::vector<std::complex<double>>> build(const DecayProblem& problem);

// Exact eigenpairs reduced to what the survival amplitude needs.
struct Diagonalized {
  std::vector<double> energies;  // E_chi
  std::vector<double> weights;   // |<psi0|Psi_chi>|^2
};
Diagonalized diagonalize(const DecayProblem& problem);

std::vector<std::complex<double>> survival_amplitude(const DecayProblem& problem,
                                                     const std::vector<double>& times);
std::vector<std::complex<double>> survival_amplitude(const Diagonalized& diag,
                                                     const std::vector<double>& times);

struct GoldenRule {
  double gamma;
  double delta_e;
};
GoldenRule golden_rule(const DecayProblem& problem);

// K(t) = -sum_mu |V_mu|^2 exp(i (e0 - eps_mu) t), hbar = 1.
std::vector<std::complex<double>> memory_kernel(const DecayProblem& problem,
                                                const std::vector<double>& times);
// First time |K| stays below 5% of |K(0)|.
double kernel_decay_time(const DecayProblem& problem);
// Windowed integral of K over [0, t_window] (default: several kernel decay
// times); gamma = -2 Re, delta_e = -Im.
GoldenRule markov_rate(const DecayProblem& problem, double t_window = -1.0);

struct LineShape {
  std::vector<double> energy;    // E_chi inside the fit window
  std::vector<double> strength;  // weight / delta (density normalization)
  std::vector<double> lorentzian;  // fitted model on the same energies
  double center = 0.0;
  double fwhm = 0.0;
  double total_strength = 0.0;  // sum of all weights
};
LineShape line_shape(const DecayProblem& problem);

double revival_time(const DecayProblem& problem);

struct DecayResult {
  double gamma_fit = 0.0;
  double gamma_golden = 0.0;
  double delta_e = 0.0;
  std::vector<double> times;
  std::vector<std::complex<double>> survival;  // c0(t) exp(-i E0 t)
  Diagonalized spectrum;
};

// Full pipeline: diagonalize, fit the exponential window
// [0.5, 3]/Gamma (capped below half the revival time), report golden-rule
// values alongside.  Requires bandwidth >= 10 Gamma (Markov regime).
DecayResult analyze(const DecayProblem& problem, int n_time_samples = 400);

}  // namespace qmlab::decay
