#include "qmlab/specfun.hpp"

#include <cmath>
#include <complex>

#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace qmlab::specfun;

TEST_CASE("airy_ai reference values") {
  // frozen from the Maclaurin-series oracle
  CHECK(airy_ai(0.0) == doctest::Approx(0.3550280539).epsilon(1e-9));
  CHECK(std::abs(airy_ai(0.0) - oracles::airy_series_oracle(0.0)) < 1e-14);

  // first zero, located by root-find on the series oracle
  const double z1 = oracles::bisect(oracles::airy_series_oracle, -2.5, -2.0);
  CHECK(z1 == doctest::Approx(-2.3381074).epsilon(1e-6));
  CHECK(std::abs(airy_ai(z1)) < 1e-10);
  CHECK(std::abs(airy_ai(-2.3381074)) < 1e-7);

  // monotone decay for x > 0
  CHECK(airy_ai(4.0) > 0.0);
  CHECK(airy_ai(5.0) > 0.0);
  CHECK(airy_ai(5.0) / airy_ai(4.0) < 1.0);

  CHECK_THROWS_AS(airy_ai(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(airy_ai(INFINITY), std::invalid_argument);
}

TEST_CASE("airy_ai agrees with series oracle on the overlap region") {
  for (double x = -6.0; x <= 6.0; x += 0.37)
    CHECK(std::abs(airy_ai(x) - oracles::airy_series_oracle(x)) < 1e-12);
}

TEST_CASE("airy ODE residual Ai'' = x Ai at O(h^2)") {
  // the series/asymptotics switch at |x| = 9 breaks smoothness at the last
  // digit, so the scaling check keeps a small margin around it
  auto residual = [](double h) {
    double worst = 0.0;
    for (double x = -10.0; x <= 10.0; x += 0.25) {
      if (std::abs(std::abs(x) - 9.0) < 0.1) continue;
      const double second = (airy_ai(x + h) - 2.0 * airy_ai(x) + airy_ai(x - h)) / (h * h);
      worst = std::max(worst, std::abs(second - x * airy_ai(x)));
    }
    return worst;
  };
  const double r1 = residual(1e-3);
  const double r2 = residual(2e-3);
  CHECK(r1 < 1e-4);
  CHECK(r2 / r1 == doctest::Approx(4.0).epsilon(0.25));  // O(h^2) scaling
}

TEST_CASE("oscillator_wf values and normalization") {
  CHECK(oscillator_wf({1, 1.0}, 0.0) == doctest::Approx(0.0).epsilon(1e-14));

  const auto gh = oracles::gauss_hermite(80);
  auto overlap = [&](int m, int n, double scale) {
    double acc = 0.0;
    for (size_t i = 0; i < gh.nodes.size(); ++i) {
      const double x = gh.nodes[i] * scale;
      // weight exp(-y^2) divided back out; the product chi_m chi_n carries it
      acc += gh.weights[i] * std::exp(gh.nodes[i] * gh.nodes[i]) *
             oscillator_wf({m, scale}, x) * oscillator_wf({n, scale}, x) * scale;
    }
    return acc;
  };
  CHECK(overlap(0, 0, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(overlap(2, 0, 1.0)) < 1e-10);
  CHECK(overlap(7, 7, 0.6) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(oscillator_wf({201, 1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(oscillator_wf({2, -1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("oscillator orthonormality matrix up to n = 20") {
  const auto gh = oracles::gauss_hermite(64);
  double worst = 0.0;
  for (int m = 0; m <= 20; ++m)
    for (int n = m; n <= 20; ++n) {
      double acc = 0.0;
      for (size_t i = 0; i < gh.nodes.size(); ++i)
        acc += gh.weights[i] * std::exp(gh.nodes[i] * gh.nodes[i]) *
               oscillator_wf({m, 1.0}, gh.nodes[i]) * oscillator_wf({n, 1.0}, gh.nodes[i]);
      worst = std::max(worst, std::abs(acc - (m == n ? 1.0 : 0.0)));
    }
  CHECK(worst < 1e-8);
}

TEST_CASE("clebsch_gordan reference values") {
  CHECK(clebsch_gordan({2, 0}, {2, 0}, {4, 0}) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK(clebsch_gordan({2, 0}, {2, 0}, {2, 0}) == doctest::Approx(0.0).epsilon(1e-14));
  // <2 0 | 1 1, 1 -1> = 1/sqrt(6); fixed by the orthogonality of the 1x1
  // coupling table together with <20|10,10> = sqrt(2/3)
  CHECK(clebsch_gordan({2, 2}, {2, -2}, {4, 0}) ==
        doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-12));
  // coupling with a scalar is the identity
  CHECK(clebsch_gordan({5, 3}, {0, 0}, {5, 3}) == doctest::Approx(1.0).epsilon(1e-13));
  // out-of-domain inputs give zero, never throw
  CHECK(clebsch_gordan({2, 2}, {2, 2}, {4, 0}) == 0.0);
  CHECK(clebsch_gordan({2, 0}, {2, 0}, {8, 0}) == 0.0);
}

TEST_CASE("clebsch_gordan orthogonality for j <= 6") {
  double worst = 0.0;
  for (int tj1 = 0; tj1 <= 12; tj1 += 3)      // j1 = 0, 3/2, 3, 9/2, 6
    for (int tj2 = 0; tj2 <= 12; tj2 += 4) {  // j2 = 0, 2, 4, 6
      for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2)
        for (int tJp = std::abs(tj1 - tj2); tJp <= tj1 + tj2; tJp += 2)
          for (int tM = -std::min(tJ, tJp); tM <= std::min(tJ, tJp); tM += 2) {
            double sum = 0.0;
            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
              const int tm2 = tM - tm1;
              if (std::abs(tm2) > tj2) continue;
              sum += clebsch_gordan({tj1, tm1}, {tj2, tm2}, {tJ, tM}) *
                     clebsch_gordan({tj1, tm1}, {tj2, tm2}, {tJp, tM});
            }
            worst = std::max(worst, std::abs(sum - (tJ == tJp ? 1.0 : 0.0)));
          }
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("gaunt coefficients vs sphere-quadrature oracle") {
  auto oracle = [](int L, int M, int l1, int m1, int l2, int m2) {
    return oracles::sphere_integral([&](double th, double ph) {
      return std::conj(ylm(L, M, th, ph)) * ylm(l1, m1, th, ph) * ylm(l2, m2, th, ph);
    });
  };

  for (int m = -1; m <= 1; ++m) {
    const double expected = (m % 2 ? -1.0 : 1.0) / std::sqrt(4.0 * M_PI);
    CHECK(gaunt(0, 0, 1, m, 1, -m) == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(gaunt(1, 0, 1, 0, 1, 0) == 0.0);  // l1+l2+L odd
  CHECK(gaunt(2, 2, 1, 0, 1, 1) == 0.0);  // M != m1+m2

  const int cases[][6] = {{2, 0, 1, 0, 1, 0},  {2, 1, 1, 1, 1, 0}, {3, -1, 2, -2, 1, 1},
                          {4, 2, 2, 1, 2, 1},  {0, 0, 2, -1, 2, 1}, {2, -2, 3, -3, 1, 1}};
  for (const auto& c : cases) {
    const auto ref = oracle(c[0], c[1], c[2], c[3], c[4], c[5]);
    CHECK(std::abs(ref.imag()) < 1e-12);
    CHECK(gaunt(c[0], c[1], c[2], c[3], c[4], c[5]) ==
          doctest::Approx(ref.real()).epsilon(1e-10));
    // symmetry under (l1,m1) <-> (l2,m2)
    CHECK(gaunt(c[0], c[1], c[2], c[3], c[4], c[5]) ==
          doctest::Approx(gaunt(c[0], c[1], c[4], c[5], c[2], c[3])).epsilon(1e-12));
  }
}

TEST_CASE("lande_g limits") {
  CHECK(lande_g(4, 4, 0) == doctest::Approx(1.0));        // S = 0, J = L
  CHECK(lande_g(3, 0, 3) == doctest::Approx(2.0));        // L = 0, J = S
  CHECK(lande_g(1, 2, 1) == doctest::Approx(2.0 / 3.0));  // J=1/2, L=1, S=1/2
  CHECK_THROWS_AS(lande_g(0, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(lande_g(8, 2, 2), std::invalid_argument);
}

TEST_CASE("ylm basics") {
  CHECK(ylm(0, 0, 0.7, 1.9).real() == doctest::Approx(1.0 / std::sqrt(4.0 * M_PI)));
  CHECK(ylm(0, 0, 0.7, 1.9).imag() == doctest::Approx(0.0));

  // parity: Y_lm(pi-theta, phi+pi) = (-1)^l Y_lm(theta, phi)
  for (int l = 0; l <= 4; ++l)
    for (int m = -l; m <= l; ++m) {
      const auto a = ylm(l, m, M_PI - 0.62, 2.21 + M_PI);
      const auto b = std::pow(-1.0, l) * ylm(l, m, 0.62, 2.21);
      CHECK(std::abs(a - b) < 1e-13);
    }

  const auto norm21 = oracles::sphere_integral([](double th, double ph) {
    return ylm(2, 1, th, ph) * std::conj(ylm(2, 1, th, ph));
  });
  CHECK(norm21.real() == doctest::Approx(1.0).epsilon(1e-9));

  const auto cross = oracles::sphere_integral([](double th, double ph) {
    return ylm(3, 2, th, ph) * std::conj(ylm(3, -2, th, ph));
  });
  CHECK(std::abs(cross) < 1e-12);
}
