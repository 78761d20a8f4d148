#include "qmlab/stringmodes.hpp"

#include <cmath>
#include <stdexcept>

namespace qmlab::stringmodes {

namespace {

void check_config(const StringConfig& cfg) {
  if (cfg.length <= 0.0 || cfg.speed <= 0.0)
    throw std::invalid_argument("string config: length and speed must be positive");
  if (cfg.cutoff_index < 1)
    throw std::invalid_argument("string config: cutoff index must be >= 1");
}

double mode_k(const StringConfig& cfg, int nu) {
  return (cfg.boundary == Boundary::fixed ? M_PI : 2.0 * M_PI) * nu / cfg.length;
}

}  // namespace

std::vector<Mode> mode_table(const StringConfig& cfg) {
  check_config(cfg);
  std::vector<Mode> out;
  if (cfg.boundary == Boundary::fixed) {
    for (int nu = 1; nu <= cfg.cutoff_index; ++nu) {
      const double k = mode_k(cfg, nu);
      out.push_back({nu, k, cfg.speed * k});
    }
  } else {
    for (int nu = -cfg.cutoff_index; nu <= cfg.cutoff_index; ++nu) {
      if (nu == 0) continue;
      const double k = mode_k(cfg, nu);
      out.push_back({nu, k, cfg.speed * std::abs(k)});
    }
  }
  return out;
}

TravelingVars traveling_transform(const StandingVars& s, double omega) {
  if (omega <= 0.0) throw std::invalid_argument("traveling_transform: omega must be > 0");
  const double r = 1.0 / std::sqrt(2.0);
  TravelingVars t;
  t.q_plus = r * (s.q1 - s.p2 / omega);
  t.q_minus = r * (-s.q1 - s.p2 / omega);
  t.p_plus = r * (s.p1 + omega * s.q2);
  t.p_minus = r * (-s.p1 + omega * s.q2);
  return t;
}

StandingVars traveling_transform_inverse(const TravelingVars& t, double omega) {
  if (omega <= 0.0) throw std::invalid_argument("traveling_transform: omega must be > 0");
  const double r = 1.0 / std::sqrt(2.0);
  StandingVars s;
  s.q1 = r * (t.q_plus - t.q_minus);
  s.p1 = r * (t.p_plus - t.p_minus);
  s.q2 = r * (t.p_plus + t.p_minus) / omega;
  s.p2 = -omega * r * (t.q_plus + t.q_minus);
  return s;
}

std::array<std::array<double, 4>, 4> traveling_jacobian(double omega) {
  const double r = 1.0 / std::sqrt(2.0);
  // rows: Q_k, P_k, Q_-k, P_-k; columns: q1, p1, q2, p2
  return {{{r, 0.0, 0.0, -r / omega},
           {0.0, r, r * omega, 0.0},
           {-r, 0.0, 0.0, -r / omega},
           {0.0, -r, r * omega, 0.0}}};
}

QuantaSpectrum quanta_spectrum(const StringConfig& cfg, const ModeOccupation& occ) {
  check_config(cfg);
  QuantaSpectrum out;
  double momentum = 0.0;
  for (const auto& [nu, n] : occ.occupations) {
    if (n < 0) throw std::invalid_argument("quanta_spectrum: negative occupation");
    const bool in_range = cfg.boundary == Boundary::fixed
                              ? (nu >= 1 && nu <= cfg.cutoff_index)
                              : (nu != 0 && std::abs(nu) <= cfg.cutoff_index);
    if (!in_range) throw std::invalid_argument("quanta_spectrum: mode outside cutoff");
    const double k = mode_k(cfg, nu);
    out.energy += cfg.speed * std::abs(k) * n;
    momentum += k * n;
  }
  if (cfg.boundary == Boundary::periodic) out.momentum = momentum;
  return out;
}

double quanta_momentum(const StringConfig& cfg, const ModeOccupation& occ) {
  if (cfg.boundary == Boundary::fixed)
    throw std::invalid_argument("quanta_momentum: not defined for fixed-end strings");
  return *quanta_spectrum(cfg, occ).momentum;
}

double casimir_regularized_sum(int nu_c) {
  if (nu_c < 10) throw std::invalid_argument("casimir_regularized_sum: nu_c must be >= 10");
  const double alpha = 1.0 / nu_c;
  long double sum = 0.0L;
  const long terms = std::lround(50.0 / alpha);  // exp(-50) tail is negligible
  if (terms > 200'000'000L)
    throw std::overflow_error("casimir_regularized_sum: nu_c too large for direct summation");
  for (long nu = terms; nu >= 1; --nu) sum += nu * std::exp((long double)(-alpha * nu));
  return (double)(sum - 1.0L / ((long double)alpha * alpha));
}

double casimir_sum_closed_form(int nu_c) {
  const double a = 1.0 / nu_c;
  const double e = std::exp(-a);
  return e / ((1.0 - e) * (1.0 - e));
}

namespace {

// Regularized ground-state energy of one fixed-end segment of length a with
// soft frequency cutoff Lambda: (v pi / 2a) [sum_nu nu exp(-omega_nu/Lambda)
// - 1/alpha^2].  The subtracted leading term sums to a d-independent
// constant over the two families, so dropping it per segment keeps
// E0(d) - E0(L/2) intact while avoiding a catastrophic large-number
// difference.
long double segment_energy_soft(double v, double a, double lambda) {
  const double alpha = M_PI * v / (a * lambda);
  const long terms = std::lround(50.0 / alpha);
  long double sum = 0.0L;
  for (long nu = terms; nu >= 1; --nu) sum += nu * std::exp((long double)(-alpha * nu));
  sum -= 1.0L / ((long double)alpha * alpha);
  return (M_PI * v / (2.0L * a)) * sum;
}

double segment_energy_hard(double v, double a, double lambda) {
  const long nmax = (long)std::floor(lambda * a / (M_PI * v));
  return (M_PI * v / (2.0 * a)) * 0.5 * (double)nmax * (double)(nmax + 1);
}

}  // namespace

CasimirResult casimir_energy(const StringConfig& cfg, double d) {
  check_config(cfg);
  if (d <= 0.0 || d >= cfg.length)
    throw std::invalid_argument("casimir_energy: need 0 < d < L");
  const double lambda = M_PI * cfg.speed * cfg.cutoff_index / cfg.length;
  auto e0 = [&](double dd) {
    return segment_energy_soft(cfg.speed, dd, lambda) +
           segment_energy_soft(cfg.speed, cfg.length - dd, lambda);
  };
  CasimirResult out;
  out.delta_e0 = (double)(e0(d) - e0(0.5 * cfg.length));
  const double h = 1e-5 * cfg.length;
  out.force = (double)(-(e0(d + h) - e0(d - h)) / (2.0L * h));
  return out;
}

double casimir_closed_form(const StringConfig& cfg, double d) {
  return -(M_PI * cfg.speed / 24.0) *
         (1.0 / d + 1.0 / (cfg.length - d) - 4.0 / cfg.length);
}

double casimir_energy_hard_cutoff(const StringConfig& cfg, double d) {
  check_config(cfg);
  if (d <= 0.0 || d >= cfg.length)
    throw std::invalid_argument("casimir_energy_hard_cutoff: need 0 < d < L");
  const double lambda = M_PI * cfg.speed * cfg.cutoff_index / cfg.length;
  auto e0 = [&](double dd) {
    return segment_energy_hard(cfg.speed, dd, lambda) +
           segment_energy_hard(cfg.speed, cfg.length - dd, lambda);
  };
  return e0(d) - e0(0.5 * cfg.length);
}

ActionAngle action_angle(double q, double p, double omega) {
  if (omega <= 0.0) throw std::invalid_argument("action_angle: omega must be > 0");
  if (q == 0.0 && p == 0.0)
    throw std::invalid_argument("action_angle: phase-space origin has no angle");
  ActionAngle aa;
  aa.action = (p * p + omega * omega * q * q) / (2.0 * omega);
  aa.angle = std::atan2(-p, omega * q);
  return aa;
}

double ground_state_mode_variance(const StringConfig& cfg, int nu) {
  check_config(cfg);
  const double k = mode_k(cfg, nu);
  if (k == 0.0) throw std::invalid_argument("ground_state_mode_variance: nu must be nonzero");
  return 1.0 / (2.0 * cfg.speed * std::abs(k));
}

}  // namespace qmlab::stringmodes
