#include "qmlab/gaugefields.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "qmlab/specfun.hpp"

namespace qmlab::gaugefields {

namespace {

void check_config(const LandauConfig& cfg) {
  if (cfg.b_field <= 0.0) throw std::invalid_argument("landau: B must be positive");
  if (cfg.l_y <= 0.0 || cfg.l_z <= 0.0)
    throw std::invalid_argument("landau: box lengths must be positive");
  if (cfg.charge_sign != 1 && cfg.charge_sign != -1)
    throw std::invalid_argument("landau: charge sign must be +-1");
}

}  // namespace

double LandauConfig::magnetic_length() const { return 1.0 / std::sqrt(b_field); }

double LandauConfig::guiding_center_spacing() const {
  const double l = magnetic_length();
  return 2.0 * M_PI * l * l / l_y;
}

double landau_energy(const LandauConfig& cfg, int n, double k_z) {
  check_config(cfg);
  if (n < 0) throw std::invalid_argument("landau_energy: n must be >= 0");
  return cfg.cyclotron_frequency() * (n + 0.5) + 0.5 * k_z * k_z;
}

double landau_wf(const LandauConfig& cfg, int n, double x0, double x) {
  check_config(cfg);
  return specfun::oscillator_wf({n, cfg.magnetic_length()}, x - x0);
}

CurrentProfile landau_current_profile(const LandauConfig& cfg, int n, double x0,
                                      double k_z, double x_min, double x_max,
                                      int n_points) {
  check_config(cfg);
  if (n_points < 2) throw std::invalid_argument("landau_current_profile: need >= 2 points");
  CurrentProfile out;
  out.x.resize(n_points);
  out.density.resize(n_points);
  out.j_y.resize(n_points);
  out.j_z.resize(n_points);
  const double wc = cfg.cyclotron_frequency();
  for (int i = 0; i < n_points; ++i) {
    const double x = x_min + (x_max - x_min) * i / (n_points - 1);
    const double phi = landau_wf(cfg, n, x0, x);
    const double rho = phi * phi / cfg.l_y;
    out.x[i] = x;
    out.density[i] = rho;
    out.j_y[i] = cfg.charge_sign * wc * (x0 - x) * rho;
    out.j_z[i] = cfg.charge_sign * k_z * rho;
  }
  // the window must hold essentially all of the state, otherwise the sampled
  // currents refer to an unnormalized density
  double mass = 0.0;
  const double h = (x_max - x_min) / (n_points - 1);
  for (const double rho : out.density) mass += rho * h * cfg.l_y;
  if (std::abs(mass - 1.0) > 1e-6)
    throw std::invalid_argument("landau_current_profile: window clips the state");
  return out;
}

double edge_potential(const EdgeProblem& prob, double x) {
  if (prob.x.size() < 2 || prob.x.size() != prob.v.size())
    throw std::invalid_argument("edge_potential: malformed table");
  if (x <= prob.x.front()) return prob.v.front();
  if (x >= prob.x.back()) return prob.v.back();
  const double h = prob.x[1] - prob.x[0];
  const size_t i = std::min(prob.x.size() - 2, (size_t)((x - prob.x.front()) / h));
  const double t = (x - prob.x[i]) / h;
  return (1.0 - t) * prob.v[i] + t * prob.v[i + 1];
}

EdgeProblem make_soft_wall_problem(const LandauConfig& cfg, double wall_left,
                                   double wall_right, double height, double width,
                                   double x0, int n_levels, int n_grid) {
  check_config(cfg);
  if (wall_right <= wall_left)
    throw std::invalid_argument("make_soft_wall_problem: walls out of order");
  EdgeProblem prob;
  prob.x0 = x0;
  prob.n_levels = n_levels;
  // domain extends several magnetic lengths past the walls
  const double pad = 8.0 * cfg.magnetic_length() + 4.0 * width;
  const double a = wall_left - pad, b = wall_right + pad;
  prob.x.resize(n_grid);
  prob.v.resize(n_grid);
  for (int i = 0; i < n_grid; ++i) {
    const double x = a + (b - a) * i / (n_grid - 1);
    prob.x[i] = x;
    prob.v[i] = height * (std::exp((x - wall_right) / width) +
                          std::exp((wall_left - x) / width));
  }
  return prob;
}

namespace {

void build_tridiag(const LandauConfig& cfg, const EdgeProblem& prob,
                   Eigen::VectorXd& diag, Eigen::VectorXd& sub) {
  check_config(cfg);
  const int n = (int)prob.x.size();
  if (n < 3 || prob.v.size() != prob.x.size())
    throw std::invalid_argument("edge_spectrum: malformed problem");
  const double h = prob.x[1] - prob.x[0];
  if (h >= cfg.magnetic_length() / 10.0)
    throw std::invalid_argument("edge_spectrum: grid too coarse to resolve the magnetic length");
  if (prob.n_levels < 1 || prob.n_levels > n - 2)
    throw std::invalid_argument("edge_spectrum: invalid level count");
  const double wc = cfg.cyclotron_frequency();
  diag.resize(n - 2);
  sub.resize(n - 3);
  for (int i = 1; i < n - 1; ++i) {
    const double dx = prob.x[i] - prob.x0;
    diag[i - 1] = 1.0 / (h * h) + 0.5 * wc * wc * dx * dx + prob.v[i];
  }
  sub.setConstant(-0.5 / (h * h));
}

}  // namespace

EdgeSpectrum edge_spectrum(const LandauConfig& cfg, const EdgeProblem& prob) {
  Eigen::VectorXd diag, sub;
  build_tridiag(cfg, prob, diag, sub);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub);

  const int n = (int)prob.x.size();
  const double h = prob.x[1] - prob.x[0];
  EdgeSpectrum out;
  out.energies.resize(prob.n_levels);
  out.wavefunctions.assign(prob.n_levels, std::vector<double>(n, 0.0));
  for (int lev = 0; lev < prob.n_levels; ++lev) {
    out.energies[lev] = es.eigenvalues()[lev];
    const auto vec = es.eigenvectors().col(lev);
    const double norm = 1.0 / std::sqrt(h);  // sum v_i^2 = 1 -> integral = 1
    for (int i = 1; i < n - 1; ++i) out.wavefunctions[lev][i] = vec[i - 1] * norm;
  }
  return out;
}

std::vector<double> edge_energies(const LandauConfig& cfg, const EdgeProblem& prob) {
  Eigen::VectorXd diag, sub;
  build_tridiag(cfg, prob, diag, sub);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  std::vector<double> out(prob.n_levels);
  for (int lev = 0; lev < prob.n_levels; ++lev) out[lev] = es.eigenvalues()[lev];
  return out;
}

double edge_current(const LandauConfig& cfg, const EdgeProblem& prob, int n) {
  const auto spec = edge_spectrum(cfg, prob);
  if (n < 0 || n >= (int)spec.energies.size())
    throw std::invalid_argument("edge_current: level index out of range");
  const double h = prob.x[1] - prob.x[0];
  const double wc = cfg.cyclotron_frequency();
  double acc = 0.0;
  for (size_t i = 0; i < prob.x.size(); ++i) {
    const double phi = spec.wavefunctions[n][i];
    acc += (prob.x0 - prob.x[i]) * phi * phi;
  }
  return cfg.charge_sign * wc * acc * h / cfg.l_y;
}

double edge_current_spectral(const LandauConfig& cfg, const EdgeProblem& prob, int n,
                             double step) {
  EdgeProblem plus = prob, minus = prob;
  plus.x0 += step;
  minus.x0 -= step;
  const double ep = edge_energies(cfg, plus).at(n);
  const double em = edge_energies(cfg, minus).at(n);
  // d eps/d x0 = w_c^2 integral (x0 - x) phi^2 dx, so I_y = (d eps/d x0)/(w_c L_y)
  const double deps_dx0 = (ep - em) / (2.0 * step);
  return cfg.charge_sign * deps_dx0 / (cfg.cyclotron_frequency() * cfg.l_y);
}

std::vector<std::pair<int, double>> ab_ring_spectrum(const RingConfig& cfg) {
  if (cfg.radius <= 0.0) throw std::invalid_argument("ab_ring_spectrum: radius must be > 0");
  if (cfg.m_range < 1) throw std::invalid_argument("ab_ring_spectrum: m_range must be >= 1");
  std::vector<std::pair<int, double>> out;
  const double inv = 1.0 / (2.0 * cfg.radius * cfg.radius);
  for (int m = -cfg.m_range; m <= cfg.m_range; ++m) {
    const double q = m + cfg.flux_ratio;
    out.emplace_back(m, q * q * inv);
  }
  return out;
}

std::vector<double> ab_sector_spectrum(const RingConfig& cfg, double phi0_opening) {
  if (cfg.radius <= 0.0) throw std::invalid_argument("ab_sector_spectrum: radius must be > 0");
  if (phi0_opening <= 0.0 || phi0_opening >= 2.0 * M_PI)
    throw std::invalid_argument("ab_sector_spectrum: opening must lie in (0, 2 pi)");
  std::vector<double> out;
  const double pref = M_PI * M_PI / (2.0 * cfg.radius * cfg.radius * phi0_opening * phi0_opening);
  for (int n = 1; n <= cfg.m_range; ++n) out.push_back(pref * n * n);
  return out;
}

double two_slit_shift(double b, double k, double d, double flux_ratio) {
  if (b <= 0.0 || k <= 0.0 || d <= 0.0)
    throw std::invalid_argument("two_slit_shift: geometry must be positive");
  return 2.0 * M_PI * b / (k * d) * flux_ratio;
}

GaugeComparison gauge_current_check(double e_field, double k, double t) {
  GaugeComparison out;
  out.static_gauge = {k + e_field * t, 0.0};
  out.time_dependent_gauge = {k, e_field * t};
  return out;
}

double linear_potential_wf(double eps, double f_slope, double x) {
  if (f_slope <= 0.0)
    throw std::invalid_argument("linear_potential_wf: slope must be positive");
  const double alpha = std::cbrt(2.0 * f_slope);
  return specfun::airy_ai(-alpha * (x + eps / f_slope));
}

}  // namespace qmlab::gaugefields
