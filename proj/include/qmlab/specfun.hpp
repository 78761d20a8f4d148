#pragma once

#include <complex>

namespace qmlab::specfun {

// Half-integer angular momentum (j, m) stored as doubled integers so that
// states like j = 3/2 have exact keys.
struct AngularMomentum {
  int twice_j = 0;
  int twice_m = 0;

  AngularMomentum() = default;
  AngularMomentum(int twice_j_, int twice_m_);

  double j() const { return 0.5 * twice_j; }
  double m() const { return 0.5 * twice_m; }
};

// Quantum number and length scale of a 1D harmonic oscillator eigenfunction.
struct OscillatorState {
  int n = 0;
  double length_scale = 1.0;
};

// Airy function Ai(x).  Maclaurin series pair for |x| <= 9, asymptotic
// expansion beyond; absolute error below 1e-10 for |x| <= 30.
double airy_ai(double x);

// Normalized oscillator eigenfunction chi_n(x) with the given length scale.
// Hermite part by three-term recurrence, stable for n <= 200.
double oscillator_wf(const OscillatorState& state, double x);

// Clebsch-Gordan coefficient <J M | j1 m1, j2 m2> in the Condon-Shortley
// convention.  Returns 0 outside the triangle/projection domain.
double clebsch_gordan(const AngularMomentum& j1m1, const AngularMomentum& j2m2,
                      const AngularMomentum& JM);

// Gaunt coefficient: integral of conj(Y_LM) * Y_l1m1 * Y_l2m2 over the sphere.
double gaunt(int L, int M, int l1, int m1, int l2, int m2);

// Lande g-factor for an |L S; J> multiplet; arguments are doubled quantum
// numbers.  Rejects J = 0 and triangle violations.
double lande_g(int twice_j, int twice_l, int twice_s);

// Orthonormal spherical harmonic, Condon-Shortley phase.
std::complex<double> ylm(int l, int m, double theta, double phi);

}  // namespace qmlab::specfun
