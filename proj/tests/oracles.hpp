// Test-only numerical oracles, independent of the library implementation
// paths they are used to check.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace oracles {

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Golub-Welsch on the Jacobi matrix of the orthogonal-polynomial recurrence.
inline Quadrature golub_welsch(const std::vector<double>& beta, double mu0) {
  const int n = (int)beta.size() + 1;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int i = 0; i < n - 1; ++i) sub[i] = beta[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub);
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    q.nodes[i] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    q.weights[i] = mu0 * v0 * v0;
  }
  return q;
}

// Gauss-Hermite: integral over R of exp(-x^2) g(x) dx = sum w_i g(x_i).
// Weights via the orthonormal-series identity w_i = 1/sum_k p_k(x_i)^2,
// which keeps the tiny edge weights accurate in a relative sense.
inline Quadrature gauss_hermite(int n) {
  std::vector<double> beta(n - 1);
  for (int k = 1; k < n; ++k) beta[k - 1] = std::sqrt(0.5 * k);
  Quadrature q = golub_welsch(beta, std::sqrt(M_PI));
  for (int i = 0; i < n; ++i) {
    const double y = q.nodes[i];
    double p0 = std::pow(M_PI, -0.25), p1 = std::sqrt(2.0) * y * p0;
    double sum = p0 * p0 + p1 * p1;
    for (int k = 1; k + 1 < n; ++k) {
      const double p2 = y * std::sqrt(2.0 / (k + 1.0)) * p1 - std::sqrt(k / (k + 1.0)) * p0;
      sum += p2 * p2;
      p0 = p1;
      p1 = p2;
    }
    q.weights[i] = 1.0 / sum;
  }
  return q;
}

// Gauss-Legendre on [-1, 1].
inline Quadrature gauss_legendre(int n) {
  std::vector<double> beta(n - 1);
  for (int k = 1; k < n; ++k) beta[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(beta, 2.0);
}

// Integral over the unit sphere: Gauss-Legendre in cos(theta), uniform
// trapezoid in phi (exact for trigonometric polynomials).
inline std::complex<double> sphere_integral(
    const std::function<std::complex<double>(double, double)>& f, int n_theta = 64,
    int n_phi = 128) {
  const Quadrature gl = gauss_legendre(n_theta);
  std::complex<double> total = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(gl.nodes[i]);
    std::complex<double> ring = 0.0;
    for (int j = 0; j < n_phi; ++j) ring += f(theta, 2.0 * M_PI * j / n_phi);
    total += gl.weights[i] * ring * (2.0 * M_PI / n_phi);
  }
  return total;
}

// Airy Ai by the Maclaurin solution pair, 40 terms, plain double arithmetic.
inline double airy_series_oracle(double x) {
  const double c1 = 0.3550280538878172;
  const double c2 = -0.2588194037928068;
  double f = 1.0, g = x, tf = 1.0, tg = x;
  const double x3 = x * x * x;
  for (int k = 1; k <= 40; ++k) {
    tf *= x3 / ((3.0 * k) * (3.0 * k - 1.0));
    tg *= x3 / ((3.0 * k) * (3.0 * k + 1.0));
    f += tf;
    g += tg;
  }
  return c1 * f + c2 * g;
}

// Bisection root-find.
inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-12) {
  double fa = f(a);
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if ((fa < 0) == (fm < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace oracles
