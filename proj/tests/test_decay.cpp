#include "qmlab/decay.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <stdexcept>

#include "doctest.h"

using namespace qmlab::decay;
using cplx = std::complex<double>;

TEST_CASE("bordered hamiltonian") {
  const auto p = flat_band(0.0, 4, 2.0, 0.1);
  const auto h = build(p);
  REQUIRE(h.size() == 5);
  CHECK(h[0][0] == cplx(0.0));
  for (int mu = 0; mu < 4; ++mu) {
    CHECK(h[0][mu + 1] == cplx(0.1));
    CHECK(h[mu + 1][0] == cplx(0.1));
    CHECK(h[mu + 1][mu + 1].real() == doctest::Approx(p.continuum[mu].energy));
  }
  // continuum-continuum block is empty
  for (int a = 1; a < 5; ++a)
    for (int b = 1; b < 5; ++b)
      if (a != b) CHECK(h[a][b] == cplx(0.0));
  // hermiticity is exact by construction
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) CHECK(h[a][b] == std::conj(h[b][a]));

  DecayProblem dup;
  dup.e0 = 0.0;
  dup.continuum = {{1.0, 0.1}, {1.0, 0.1}};
  CHECK_THROWS_AS(build(dup), std::invalid_argument);
}

TEST_CASE("survival: empty and single-level continua") {
  DecayProblem lone;
  lone.e0 = 0.7;
  const auto s = survival_amplitude(lone, {0.0, 1.0, 5.0});
  for (const auto& v : s) CHECK(std::abs(v) == doctest::Approx(1.0));

  // two-level Rabi problem against the closed form
  DecayProblem rabi;
  rabi.e0 = 0.0;
  rabi.continuum = {{0.5, 0.2}};
  const double half_det = 0.25, v = 0.2;
  const double omega = std::sqrt(half_det * half_det + v * v);
  std::vector<double> times;
  for (double t = 0.0; t < 20.0; t += 0.31) times.push_back(t);
  const auto amp = survival_amplitude(rabi, times);
  double min_p = 1.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double p = std::norm(amp[i]);
    const double sine = v * std::sin(omega * times[i]) / omega;
    CHECK(p == doctest::Approx(1.0 - sine * sine).epsilon(1e-10));
    min_p = std::min(min_p, p);
  }
  CHECK(min_p > 0.4);  // oscillates, never decays
}

TEST_CASE("survival normalization") {
  const auto p = flat_band(0.0, 80, 8.0, 0.05);
  const auto d = diagonalize(p);
  double total = 0.0;
  for (const double w : d.weights) total += w;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  const auto s = survival_amplitude(d, {0.0, 0.7, 3.0});
  CHECK(std::abs(s[0]) == doctest::Approx(1.0).epsilon(1e-10));
  for (const auto& v : s) CHECK(std::abs(v) <= 1.0 + 1e-10);
}

TEST_CASE("golden rule") {
  const auto p = flat_band(0.0, 400, 20.0, 0.05);
  const auto gr = golden_rule(p);
  CHECK(gr.gamma == doctest::Approx(2.0 * M_PI * 0.05 * 0.05 * 400 / 20.0).epsilon(1e-12));
  CHECK(std::abs(gr.delta_e) < 1e-10);  // symmetric band, antisymmetric summand

  // below the band edge: no decay, negative shift
  auto below = p;
  below.e0 = -15.0;
  const auto grb = golden_rule(below);
  CHECK(grb.gamma == 0.0);
  CHECK(grb.delta_e < 0.0);

  // e0 on a grid point is rejected
  DecayProblem ongrid;
  ongrid.e0 = 1.0;
  ongrid.continuum = {{0.0, 0.1}, {1.0, 0.1}, {2.0, 0.1}};
  CHECK_THROWS_AS(golden_rule(ongrid), std::invalid_argument);

  // gaussian coupling profile: rate set by the on-shell coupling
  const auto g = gaussian_band(0.0, 2000, 20.0, 0.05, 4.0);
  const auto grg = golden_rule(g);
  CHECK(grg.gamma == doctest::Approx(2.0 * M_PI * 0.0025 * 100.0).epsilon(1e-3));
}

TEST_CASE("memory kernel and markov rates") {
  const auto p = flat_band(0.0, 600, 20.0, 0.05);
  const auto k0 = memory_kernel(p, {0.0})[0];
  CHECK(k0.imag() == doctest::Approx(0.0));
  CHECK(k0.real() == doctest::Approx(-600 * 0.0025).epsilon(1e-12));

  // kernel support is of order 1/bandwidth
  const double t_k = kernel_decay_time(p);
  CHECK(t_k > 1.0 / 20.0);
  CHECK(t_k < 100.0 / 20.0);

  const auto gr = golden_rule(p);
  const auto mk = markov_rate(p);
  CHECK(mk.gamma == doctest::Approx(gr.gamma).epsilon(0.03));
  CHECK(std::abs(mk.delta_e) < 0.03 * gr.gamma);  // symmetric band

  CHECK_THROWS_AS(markov_rate(p, 0.1 / 20.0), std::invalid_argument);
}

TEST_CASE("exponential decay of a flat band") {
  // bandwidth / Gamma ~ 42, Gamma / delta ~ 14
  const auto p = flat_band(0.0, 600, 20.0, 0.05);
  const auto res = analyze(p);
  CHECK(res.gamma_golden == doctest::Approx(2.0 * M_PI * 0.0025 * 30.0));
  CHECK(res.gamma_fit == doctest::Approx(res.gamma_golden).epsilon(0.02));

  // short-time quadratic law: 1 - |c0|^2 = (sum |V|^2) t^2 + O(t^4)
  const double w2 = p.coupling_norm2();
  std::vector<double> ts;
  for (double t = 0.002; t <= 0.02; t += 0.002) ts.push_back(t);
  const auto amps = survival_amplitude(res.spectrum, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double lhs = 1.0 - std::norm(amps[i]);
    CHECK(lhs == doctest::Approx(w2 * ts[i] * ts[i]).epsilon(0.01));
  }

  // quadrupling |V|^2 quadruples the fitted rate
  const auto p2 = flat_band(0.0, 600, 20.0, 0.10);
  const auto res2 = analyze(p2);
  CHECK(res2.gamma_fit == doctest::Approx(4.0 * res.gamma_fit).epsilon(0.04));
}

TEST_CASE("line shape") {
  // off-center level for a nonzero shift
  auto p = flat_band(0.0, 900, 24.0, 0.05);
  p.e0 = 4.9;  // stays off-grid; band is [-12, 12]
  const auto gr = golden_rule(p);
  CHECK(gr.delta_e != 0.0);

  const auto ls = line_shape(p);
  CHECK(ls.total_strength == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ls.fwhm == doctest::Approx(gr.gamma).epsilon(0.05));
  CHECK(ls.center - p.e0 == doctest::Approx(gr.delta_e).epsilon(0.05));

  // under-resolved band is rejected
  const auto coarse = flat_band(0.0, 30, 20.0, 0.05);
  CHECK_THROWS_AS(line_shape(coarse), std::invalid_argument);
}

TEST_CASE("revivals of a finite band") {
  const auto p = flat_band(0.0, 200, 8.0, 0.06);
  CHECK(revival_time(p) == doctest::Approx(2.0 * M_PI / 0.04));
  const auto fine = flat_band(0.0, 400, 8.0, 0.06);
  CHECK(revival_time(fine) == doctest::Approx(2.0 * revival_time(p)));

  const auto gr = golden_rule(p);
  const double t_rev = revival_time(p);
  const auto d = diagonalize(p);
  std::vector<double> ts;
  for (double t = 0.9 * t_rev; t <= 1.1 * t_rev; t += t_rev / 500.0) ts.push_back(t);
  const auto amps = survival_amplitude(d, ts);
  double peak = 0.0;
  for (const auto& a : amps) peak = std::max(peak, std::norm(a));
  CHECK(peak > 10.0 * std::exp(-gr.gamma * t_rev));
  CHECK(peak > 1e-3);  // visibly above the noise floor

  DecayProblem uneven;
  uneven.e0 = 0.0;
  uneven.continuum = {{-1.0, 0.1}, {0.5, 0.1}, {2.5, 0.1}};
  CHECK_THROWS_AS(revival_time(uneven), std::invalid_argument);
}

TEST_CASE("markov-regime guard") {
  // Gamma = 2 pi * 0.09 * 10 ~ 5.65 on a bandwidth of 8: outside the regime
  const auto strong = flat_band(0.0, 80, 8.0, 0.3);
  CHECK_THROWS_AS(analyze(strong), std::invalid_argument);
}
