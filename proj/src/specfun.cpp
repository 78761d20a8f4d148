#include "qmlab/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qmlab::specfun {

AngularMomentum::AngularMomentum(int twice_j_, int twice_m_)
    : twice_j(twice_j_), twice_m(twice_m_) {
  if (twice_j < 0) throw std::invalid_argument("AngularMomentum: 2j must be >= 0");
  if (std::abs(twice_m) > twice_j)
    throw std::invalid_argument("AngularMomentum: |2m| exceeds 2j");
  if (((twice_j ^ twice_m) & 1) != 0)
    throw std::invalid_argument("AngularMomentum: 2j and 2m must have equal parity");
}

namespace {

// ---------------------------------------------------------------------------
// Airy function

// Maclaurin pair: Ai(x) = c1 f(x) + c2 g(x) with
//   f = sum 3^k (1/3)_k x^{3k}/(3k)!,  g = sum 3^k (2/3)_k x^{3k+1}/(3k+1)!
// Summed in long double; cancellation stays below ~1e7 for |x| <= 9.
long double airy_series(long double x) {
  const long double c1 = 0.35502805388781723926L;   // Ai(0)
  const long double c2 = -0.25881940379280679841L;  // Ai'(0)
  long double f = 1.0L, g = x;
  long double tf = 1.0L, tg = x;
  const long double x3 = x * x * x;
  for (int k = 1; k < 200; ++k) {
    tf *= x3 / ((3.0L * k) * (3.0L * k - 1.0L));
    tg *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    f += tf;
    g += tg;
    if (std::abs(tf) < 1e-25L * std::abs(f) && std::abs(tg) < 1e-25L * (std::abs(g) + 1e-30L))
      break;
  }
  return c1 * f + c2 * g;
}

// Coefficients u_k of the Poincare expansion, u_k = Gamma(3k+1/2)/(54^k k! Gamma(k+1/2)).
std::vector<long double> airy_u_coeffs(int n) {
  std::vector<long double> u(n);
  u[0] = 1.0L;
  for (int k = 1; k < n; ++k)
    u[k] = u[k - 1] * (6.0L * k - 5.0L) * (6.0L * k - 3.0L) * (6.0L * k - 1.0L) /
           (216.0L * k * (2.0L * k - 1.0L));
  return u;
}

long double airy_asymptotic_pos(long double x) {
  const long double zeta = 2.0L / 3.0L * x * std::sqrt(x);
  static const std::vector<long double> u = airy_u_coeffs(40);
  long double sum = 0.0L, term = 1.0L, prev = 1e30L;
  for (int k = 0; k < (int)u.size(); ++k) {
    term = u[k] / std::pow(zeta, (long double)k);
    if (std::abs(term) > prev) break;  // optimal truncation
    sum += (k % 2 ? -term : term);
    prev = std::abs(term);
  }
  const long double pi = 3.14159265358979323846L;
  return std::exp(-zeta) / (2.0L * std::sqrt(pi) * std::pow(x, 0.25L)) * sum;
}

long double airy_asymptotic_neg(long double x) {
  const long double ax = -x;
  const long double zeta = 2.0L / 3.0L * ax * std::sqrt(ax);
  static const std::vector<long double> u = airy_u_coeffs(40);
  long double se = 0.0L, so = 0.0L, prev = 1e30L;
  for (int k = 0; 2 * k + 1 < (int)u.size(); ++k) {
    const long double te = u[2 * k] / std::pow(zeta, 2.0L * k);
    if (te > prev) break;
    se += (k % 2 ? -te : te);
    const long double to = u[2 * k + 1] / std::pow(zeta, 2.0L * k + 1.0L);
    so += (k % 2 ? -to : to);
    prev = to;
  }
  const long double pi = 3.14159265358979323846L;
  return (std::sin(zeta + pi / 4.0L) * se - std::cos(zeta + pi / 4.0L) * so) /
         (std::sqrt(pi) * std::pow(ax, 0.25L));
}

// ---------------------------------------------------------------------------
// factorial tables

constexpr int kMaxFact = 520;

const long double* log_fact_table() {
  static std::array<long double, kMaxFact> table = [] {
    std::array<long double, kMaxFact> t{};
    t[0] = 0.0L;
    for (int n = 1; n < kMaxFact; ++n) t[n] = t[n - 1] + std::log((long double)n);
    return t;
  }();
  return table.data();
}

long double log_fact(int n) {
  if (n < 0 || n >= kMaxFact) throw std::invalid_argument("log_fact: out of range");
  return log_fact_table()[n];
}

bool triangle_ok(int tj1, int tj2, int tJ) {
  return tJ >= std::abs(tj1 - tj2) && tJ <= tj1 + tj2 && ((tj1 + tj2 + tJ) % 2 == 0);
}

}  // namespace

double airy_ai(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("airy_ai: non-finite input");
  if (std::abs(x) <= 9.0) return (double)airy_series((long double)x);
  if (x > 0) return (double)airy_asymptotic_pos((long double)x);
  return (double)airy_asymptotic_neg((long double)x);
}

double oscillator_wf(const OscillatorState& state, double x) {
  if (state.n < 0 || state.n > 200)
    throw std::invalid_argument("oscillator_wf: n outside recurrence-stable range [0,200]");
  if (state.length_scale <= 0.0)
    throw std::invalid_argument("oscillator_wf: length scale must be positive");
  const double y = x / state.length_scale;
  // normalized Hermite functions h_n(y), h_0 = pi^{-1/4} exp(-y^2/2)
  double h0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * y * y);
  if (state.n == 0) return h0 / std::sqrt(state.length_scale);
  double h1 = y * std::sqrt(2.0) * h0;
  for (int k = 1; k < state.n; ++k) {
    const double h2 = y * std::sqrt(2.0 / (k + 1.0)) * h1 - std::sqrt(k / (k + 1.0)) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1 / std::sqrt(state.length_scale);
}

double clebsch_gordan(const AngularMomentum& j1m1, const AngularMomentum& j2m2,
                      const AngularMomentum& JM) {
  const int tj1 = j1m1.twice_j, tm1 = j1m1.twice_m;
  const int tj2 = j2m2.twice_j, tm2 = j2m2.twice_m;
  const int tJ = JM.twice_j, tM = JM.twice_m;
  if (tj1 > 100 || tj2 > 100 || tJ > 100)
    throw std::invalid_argument("clebsch_gordan: j capped at 50");
  if (tM != tm1 + tm2) return 0.0;
  if (!triangle_ok(tj1, tj2, tJ)) return 0.0;

  // All of the following are integers by the parity invariants.
  const int a = (tj1 + tj2 - tJ) / 2;
  const int b = (tj1 - tj2 + tJ) / 2;
  const int c = (-tj1 + tj2 + tJ) / 2;
  const int d = (tj1 + tj2 + tJ) / 2 + 1;
  const long double log_pref =
      0.5L * (std::log((long double)(tJ + 1)) + log_fact(a) + log_fact(b) + log_fact(c) -
              log_fact(d) + log_fact((tj1 + tm1) / 2) + log_fact((tj1 - tm1) / 2) +
              log_fact((tj2 + tm2) / 2) + log_fact((tj2 - tm2) / 2) +
              log_fact((tJ + tM) / 2) + log_fact((tJ - tM) / 2));

  const int k_min = std::max({0, (tj2 - tJ - tm1) / 2, (tj1 - tJ + tm2) / 2});
  const int k_max = std::min({a, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
  long double sum = 0.0L;
  for (int k = k_min; k <= k_max; ++k) {
    const long double log_term =
        log_fact(k) + log_fact(a - k) + log_fact((tj1 - tm1) / 2 - k) +
        log_fact((tj2 + tm2) / 2 - k) + log_fact((tJ - tj2 + tm1) / 2 + k) +
        log_fact((tJ - tj1 - tm2) / 2 + k);
    const long double term = std::exp(log_pref - log_term);
    sum += (k % 2 ? -term : term);
  }
  return (double)sum;
}

double gaunt(int L, int M, int l1, int m1, int l2, int m2) {
  if (L < 0 || l1 < 0 || l2 < 0) throw std::invalid_argument("gaunt: negative l");
  if (std::abs(M) > L || std::abs(m1) > l1 || std::abs(m2) > l2) return 0.0;
  if (M != m1 + m2) return 0.0;
  if (!triangle_ok(2 * l1, 2 * l2, 2 * L)) return 0.0;
  if ((l1 + l2 + L) % 2 != 0) return 0.0;  // parity of the integrand
  const double a =
      std::sqrt((2.0 * l1 + 1.0) * (2.0 * l2 + 1.0) / (4.0 * M_PI * (2.0 * L + 1.0)));
  const double cg0 = clebsch_gordan({2 * l1, 0}, {2 * l2, 0}, {2 * L, 0});
  const double cg = clebsch_gordan({2 * l1, 2 * m1}, {2 * l2, 2 * m2}, {2 * L, 2 * M});
  return a * cg0 * cg;
}

double lande_g(int twice_j, int twice_l, int twice_s) {
  if (twice_j == 0)
    throw std::invalid_argument("lande_g: J = 0 has no projection, g undefined");
  if (!triangle_ok(twice_l, twice_s, twice_j))
    throw std::invalid_argument("lande_g: (L,S,J) violates the triangle rule");
  const double J = 0.5 * twice_j, L = 0.5 * twice_l, S = 0.5 * twice_s;
  return 1.0 + (J * (J + 1.0) - L * (L + 1.0) + S * (S + 1.0)) / (2.0 * J * (J + 1.0));
}

std::complex<double> ylm(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw std::invalid_argument("ylm: need |m| <= l");
  const int am = std::abs(m);
  const double ct = std::cos(theta), st = std::sin(theta);
  // normalized associated Legendre with Condon-Shortley phase
  double pmm = 1.0 / std::sqrt(4.0 * M_PI);
  for (int i = 1; i <= am; ++i) pmm *= -std::sqrt((2.0 * i + 1.0) / (2.0 * i)) * st;
  double p = pmm;
  if (l > am) {
    double pm1 = pmm;
    double pl = std::sqrt(2.0 * am + 3.0) * ct * pmm;
    for (int ll = am + 2; ll <= l; ++ll) {
      const double f1 = std::sqrt((4.0 * ll * ll - 1.0) / ((double)ll * ll - am * am));
      const double f2 =
          std::sqrt(((ll - 1.0) * (ll - 1.0) - am * am) / (4.0 * (ll - 1.0) * (ll - 1.0) - 1.0));
      const double pnew = f1 * (ct * pl - f2 * pm1);
      pm1 = pl;
      pl = pnew;
    }
    p = pl;
  }
  const std::complex<double> phase(std::cos(am * phi), std::sin(am * phi));
  std::complex<double> y = p * phase;
  if (m < 0) y = (am % 2 ? -1.0 : 1.0) * std::conj(y);
  return y;
}

}  // namespace qmlab::specfun
