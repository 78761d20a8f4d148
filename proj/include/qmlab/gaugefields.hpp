#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace qmlab::gaugefields {

// Natural units e = m = hbar = 1 throughout this module.
struct LandauConfig {
  double b_field = 1.0;
  double l_y = 1.0;
  double l_z = 1.0;
  int charge_sign = 1;

  double cyclotron_frequency() const { return b_field; }
  double magnetic_length() const;
  double guiding_center_spacing() const;  // delta x0 = 2 pi l^2 / L_y
};

double landau_energy(const LandauConfig& cfg, int n, double k_z);

// phi_{n,x0}(x) = chi_n(x - x0) at the magnetic length scale.
double landau_wf(const LandauConfig& cfg, int n, double x0, double x);

// j_x vanishes identically for these states and is not tabulated.
struct CurrentProfile {
  std::vector<double> x;
  std::vector<double> density;  // rho(x), integrates to 1/L_y over x
  std::vector<double> j_y;
  std::vector<double> j_z;
};
CurrentProfile landau_current_profile(const LandauConfig& cfg, int n, double x0,
                                      double k_z, double x_min, double x_max,
                                      int n_points);

// Tabulated edge potential on a uniform grid plus the guiding center.
struct EdgeProblem {
  std::vector<double> x;  // uniform, ascending
  std::vector<double> v;  // V(x) samples
  double x0 = 0.0;
  int n_levels = 1;
};

// V interpolated linearly between samples (clamped outside).
double edge_potential(const EdgeProblem& prob, double x);

// Symmetric soft exponential walls at both ends of [wall_left, wall_right].
EdgeProblem make_soft_wall_problem(const LandauConfig& cfg, double wall_left,
                                   double wall_right, double height, double width,
                                   double x0, int n_levels, int n_grid);

struct EdgeSpectrum {
  std::vector<double> energies;
  // continuum-normalized eigenfunctions, column n sampled on prob.x
  std::vector<std::vector<double>> wavefunctions;
};
EdgeSpectrum edge_spectrum(const LandauConfig& cfg, const EdgeProblem& prob);
// Eigenvalues only; much cheaper for level sweeps and derivatives.
std::vector<double> edge_energies(const LandauConfig& cfg, const EdgeProblem& prob);

// Total y-current of level n from the profile integral.
double edge_current(const LandauConfig& cfg, const EdgeProblem& prob, int n);
// Same quantity from the spectral derivative d eps_n / d x0.
double edge_current_spectral(const LandauConfig& cfg, const EdgeProblem& prob, int n,
                             double step = 1e-3);

struct RingConfig {
  double radius = 1.0;
  double flux_ratio = 0.0;  // Phi / Phi_0
  int m_range = 5;
};

std::vector<std::pair<int, double>> ab_ring_spectrum(const RingConfig& cfg);
std::vector<double> ab_sector_spectrum(const RingConfig& cfg, double phi0_opening);
double two_slit_shift(double b, double k, double d, double flux_ratio);

struct GaugeCurrents {
  double convective;
  double diamagnetic;
  double total() const { return convective + diamagnetic; }
};
struct GaugeComparison {
  GaugeCurrents static_gauge;
  GaugeCurrents time_dependent_gauge;
};
GaugeComparison gauge_current_check(double e_field, double k, double t);

// phi_eps(x) ~ Ai(-alpha (x + eps/F)), alpha = (2F)^(1/3).
double linear_potential_wf(double eps, double f_slope, double x);

}  // namespace qmlab::gaugefields
