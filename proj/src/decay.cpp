#include "qmlab/decay.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmlab::decay {

void DecayProblem::validate() const {
  if (include_continuum_coupling)
    throw std::invalid_argument("DecayProblem: continuum-continuum coupling is not modeled");
  for (std::size_t i = 0; i + 1 < continuum.size(); ++i)
    if (!(continuum[i].energy < continuum[i + 1].energy))
      throw std::invalid_argument("DecayProblem: energies must be strictly increasing");
  for (const auto& lvl : continuum)
    if (!std::isfinite(lvl.energy) || !std::isfinite(std::abs(lvl.coupling)))
      throw std::invalid_argument("DecayProblem: non-finite entry");
}

double DecayProblem::spacing() const {
  if (continuum.size() < 2)
    throw std::invalid_argument("DecayProblem: spacing needs at least two levels");
  const double delta = continuum[1].energy - continuum[0].energy;
  for (std::size_t i = 0; i + 1 < continuum.size(); ++i) {
    const double d = continuum[i + 1].energy - continuum[i].energy;
    if (std::abs(d - delta) > 1e-9 * std::abs(delta))
      throw std::invalid_argument("DecayProblem: nonuniform grid");
  }
  return delta;
}

double DecayProblem::bandwidth() const {
  return continuum.back().energy - continuum.front().energy + spacing();
}

double DecayProblem::coupling_norm2() const {
  double s = 0.0;
  for (const auto& lvl : continuum) s += std::norm(lvl.coupling);
  return s;
}

DecayProblem flat_band(double e0, int levels, double bandwidth, double coupling) {
  if (levels < 1 || bandwidth <= 0.0)
    throw std::invalid_argument("flat_band: need levels >= 1 and bandwidth > 0");
  DecayProblem p;
  p.e0 = e0;
  const double delta = bandwidth / levels;
  p.continuum.reserve(levels);
  for (int mu = 0; mu < levels; ++mu)
    p.continuum.push_back({e0 - 0.5 * bandwidth + (mu + 0.5) * delta, coupling});
  return p;
}

DecayProblem gaussian_band(double e0, int levels, double bandwidth, double peak_coupling,
                           double profile_width) {
  DecayProblem p = flat_band(e0, levels, bandwidth, peak_coupling);
  for (auto& lvl : p.continuum) {
    const double u = (lvl.energy - e0) / profile_width;
    lvl.coupling *= std::exp(-0.5 * u * u);
  }
  return p;
}

std::vector<std::vector<std::complex<double>>> build(const DecayProblem& problem) {
  problem.validate();
  const std::size_t m = problem.continuum.size();
  std::vector<std::vector<std::complex<double>>> h(m + 1,
                                                   std::vector<std::complex<double>>(m + 1, 0.0));
  h[0][0] = problem.e0;
  for (std::size_t mu = 0; mu < m; ++mu) {
    h[0][mu + 1] = problem.continuum[mu].coupling;
    h[mu + 1][0] = std::conj(problem.continuum[mu].coupling);
    h[mu + 1][mu + 1] = problem.continuum[mu].energy;
  }
  return h;
}

Diagonalized diagonalize(const DecayProblem& problem) {
  problem.validate();
  const int m = (int)problem.continuum.size();
  bool real_couplings = true;
  for (const auto& lvl : problem.continuum)
    if (lvl.coupling.imag() != 0.0) real_couplings = false;

  Diagonalized out;
  out.energies.resize(m + 1);
  out.weights.resize(m + 1);
  if (real_couplings) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m + 1, m + 1);
    h(0, 0) = problem.e0;
    for (int mu = 0; mu < m; ++mu) {
      h(0, mu + 1) = h(mu + 1, 0) = problem.continuum[mu].coupling.real();
      h(mu + 1, mu + 1) = problem.continuum[mu].energy;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    for (int k = 0; k <= m; ++k) {
      out.energies[k] = es.eigenvalues()[k];
      const double c = es.eigenvectors()(0, k);
      out.weights[k] = c * c;
    }
  } else {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m + 1, m + 1);
    h(0, 0) = problem.e0;
    for (int mu = 0; mu < m; ++mu) {
      h(0, mu + 1) = problem.continuum[mu].coupling;
      h(mu + 1, 0) = std::conj(problem.continuum[mu].coupling);
      h(mu + 1, mu + 1) = problem.continuum[mu].energy;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    for (int k = 0; k <= m; ++k) {
      out.energies[k] = es.eigenvalues()[k];
      out.weights[k] = std::norm(es.eigenvectors()(0, k));
    }
  }
  return out;
}

std::vector<std::complex<double>> survival_amplitude(const Diagonalized& diag,
                                                     const std::vector<double>& times) {
  std::vector<std::complex<double>> out(times.size(), 0.0);
  for (std::size_t t = 0; t < times.size(); ++t) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < diag.energies.size(); ++k)
      acc += diag.weights[k] *
             std::exp(std::complex<double>(0.0, -diag.energies[k] * times[t]));
    out[t] = acc;
  }
  return out;
}

std::vector<std::complex<double>> survival_amplitude(const DecayProblem& problem,
                                                     const std::vector<double>& times) {
  return survival_amplitude(diagonalize(problem), times);
}

GoldenRule golden_rule(const DecayProblem& problem) {
  problem.validate();
  const double delta = problem.spacing();
  const auto& c = problem.continuum;
  GoldenRule out{0.0, 0.0};

  const bool inside =
      problem.e0 > c.front().energy && problem.e0 < c.back().energy;
  if (inside) {
    // smoothed |V|^2 at e0: average over a small window around the level
    const double half_window = std::max(2.5 * delta, 0.01 * problem.bandwidth());
    double acc = 0.0;
    int count = 0;
    for (const auto& lvl : c)
      if (std::abs(lvl.energy - problem.e0) <= half_window) {
        acc += std::norm(lvl.coupling);
        ++count;
      }
    if (count > 0) out.gamma = 2.0 * M_PI * (acc / count) / delta;
  }

  // principal value with symmetric exclusion of the bracketing pair
  std::size_t above = 0;
  while (above < c.size() && c[above].energy < problem.e0) ++above;
  if (above < c.size() && c[above].energy == problem.e0)
    throw std::invalid_argument(
        "golden_rule: e0 coincides with a grid energy; the excluded-point rule is undefined");
  double pv = 0.0;
  for (std::size_t mu = 0; mu < c.size(); ++mu) {
    if (inside && (mu + 1 == above || mu == above)) continue;  // symmetric exclusion
    pv += std::norm(c[mu].coupling) / (problem.e0 - c[mu].energy);
  }
  out.delta_e = pv;
  return out;
}

std::vector<std::complex<double>> memory_kernel(const DecayProblem& problem,
                                                const std::vector<double>& times) {
  problem.validate();
  std::vector<std::complex<double>> out(times.size(), 0.0);
  for (std::size_t t = 0; t < times.size(); ++t) {
    std::complex<double> acc = 0.0;
    for (const auto& lvl : problem.continuum)
      acc += std::norm(lvl.coupling) *
             std::exp(std::complex<double>(0.0, (problem.e0 - lvl.energy) * times[t]));
    out[t] = -acc;
  }
  return out;
}

double kernel_decay_time(const DecayProblem& problem) {
  const double w = problem.bandwidth();
  const double k0 = problem.coupling_norm2();
  const double dt = 0.02 / w;
  std::vector<double> grid;
  for (double t = dt; t < 50.0 / w; t += dt) grid.push_back(t);
  const auto k = memory_kernel(problem, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool below = true;
    for (std::size_t j = i; j < grid.size(); ++j)
      if (std::abs(k[j]) >= 0.05 * k0) {
        below = false;
        break;
      }
    if (below) return grid[i];
  }
  return grid.back();
}

GoldenRule markov_rate(const DecayProblem& problem, double t_window) {
  problem.validate();
  const double w = problem.bandwidth();
  if (t_window <= 0.0) t_window = 50.0 / w;
  if (t_window < 10.0 / w)
    throw std::invalid_argument("markov_rate: integration window shorter than the kernel range");
  const int n = 4000;
  std::vector<double> grid(n + 1);
  for (int i = 0; i <= n; ++i) grid[i] = t_window * i / n;
  const auto k = memory_kernel(problem, grid);
  std::complex<double> integral = 0.0;
  for (int i = 0; i < n; ++i) integral += 0.5 * (k[i] + k[i + 1]) * (grid[i + 1] - grid[i]);
  return {-2.0 * integral.real(), -integral.imag()};
}

namespace {

// Lorentzian fit through the reciprocal: 1/y is quadratic in E; weighted
// least squares with weights y^4 recovers the direct residuals.
void fit_lorentzian(const std::vector<double>& e, const std::vector<double>& y,
                    double& center, double& fwhm) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (y[i] <= 0.0) continue;
    const double wgt = y[i] * y[i] * y[i] * y[i];
    const Eigen::Vector3d row(e[i] * e[i], e[i], 1.0);
    m += wgt * row * row.transpose();
    rhs += wgt * row / y[i];
  }
  const Eigen::Vector3d q = m.ldlt().solve(rhs);
  center = -q[1] / (2.0 * q[0]);
  const double hwhm2 = q[2] / q[0] - center * center;
  if (q[0] <= 0.0 || hwhm2 <= 0.0)
    throw std::runtime_error("line_shape: lorentzian fit failed");
  fwhm = 2.0 * std::sqrt(hwhm2);
}

}  // namespace

LineShape line_shape(const DecayProblem& problem) {
  const auto gr = golden_rule(problem);
  const double delta = problem.spacing();
  if (gr.gamma < 5.0 * delta)
    throw std::invalid_argument("line_shape: band under-resolved (need delta << Gamma)");

  const auto diag = diagonalize(problem);
  LineShape out;
  for (const double w : diag.weights) out.total_strength += w;

  const double e_center = problem.e0 + gr.delta_e;
  const double window = std::min(10.0 * gr.gamma, 0.45 * problem.bandwidth());
  for (std::size_t k = 0; k < diag.energies.size(); ++k) {
    if (std::abs(diag.energies[k] - e_center) > window) continue;
    out.energy.push_back(diag.energies[k]);
    out.strength.push_back(diag.weights[k] / delta);
  }
  fit_lorentzian(out.energy, out.strength, out.center, out.fwhm);

  out.lorentzian.resize(out.energy.size());
  const double hw = 0.5 * out.fwhm;
  for (std::size_t i = 0; i < out.energy.size(); ++i) {
    const double x = out.energy[i] - out.center;
    out.lorentzian[i] = (1.0 / M_PI) * hw / (x * x + hw * hw);
  }
  return out;
}

double revival_time(const DecayProblem& problem) { return 2.0 * M_PI / problem.spacing(); }

DecayResult analyze(const DecayProblem& problem, int n_time_samples) {
  const auto gr = golden_rule(problem);
  if (gr.gamma <= 0.0) throw std::invalid_argument("analyze: no decay channel at e0");
  if (problem.bandwidth() < 10.0 * gr.gamma)
    throw std::invalid_argument("analyze: outside the Markov regime (bandwidth < 10 Gamma)");

  DecayResult res;
  res.gamma_golden = gr.gamma;
  res.delta_e = gr.delta_e;
  res.spectrum = diagonalize(problem);

  const double t_rev = revival_time(problem);
  const double t_lo = 0.5 / gr.gamma;
  const double t_hi = std::min(3.0 / gr.gamma, 0.5 * t_rev);
  if (t_hi <= t_lo)
    throw std::invalid_argument("analyze: revival precedes the exponential fit window");

  res.times.resize(n_time_samples);
  for (int i = 0; i < n_time_samples; ++i)
    res.times[i] = t_hi * (i + 1) / (double)n_time_samples;
  res.survival = survival_amplitude(res.spectrum, res.times);

  // linear regression of log |c0|^2 over the fit window
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (int i = 0; i < n_time_samples; ++i) {
    if (res.times[i] < t_lo) continue;
    const double p = std::norm(res.survival[i]);
    if (p <= 0.0) continue;
    const double x = res.times[i], y = std::log(p);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 8) throw std::runtime_error("analyze: too few samples in the fit window");
  res.gamma_fit = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  return res;
}

}  // namespace qmlab::decay
