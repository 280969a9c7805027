#pragma once

// Independent references for the unit tests: composite Simpson quadrature
// over analytic integrands and closed-form Gaussian moments. Nothing here
// touches the library's grids or transforms, so agreement is evidence, not
// tautology.

#include <cmath>
#include <complex>

namespace oracle {

// Composite Simpson rule on [a, b] with n panels (n even).
template <class Fn>
double simpson(Fn&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) {
    acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

// Moments of the normalized packet exp(-(x-c)^2/(4 s^2) + i k0 x): s is the
// position standard deviation.
inline double gaussian_var_x(double sigma) { return sigma * sigma; }
inline double gaussian_mean_p(double hbar, double k0) { return hbar * k0; }
inline double gaussian_var_p(double hbar, double sigma) {
  return hbar * hbar / (4.0 * sigma * sigma);
}
inline double gaussian_mean_kinetic(double hbar, double mass, double k0, double sigma) {
  return (gaussian_mean_p(hbar, k0) * gaussian_mean_p(hbar, k0) +
          gaussian_var_p(hbar, sigma)) /
         (2.0 * mass);
}

// Elastic head-on collision: outgoing velocities from the standard
// two-body formula, independent of the library's impulse form.
struct Elastic1d {
  double va_out, vb_out;
};
inline Elastic1d elastic_velocities(double ma, double va, double mb, double vb) {
  const double m = ma + mb;
  return {((ma - mb) * va + 2.0 * mb * vb) / m, ((mb - ma) * vb + 2.0 * ma * va) / m};
}

// Observed order of accuracy from two error samples at h and h/2.
inline double richardson_order(double coarse, double fine) { return std::log2(coarse / fine); }

}  // namespace oracle
