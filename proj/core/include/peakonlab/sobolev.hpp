#pragma once

#include <complex>
#include <vector>

#include "peakonlab/grid.hpp"
#include "peakonlab/jets.hpp"

namespace pklab {

// Discrete approximation of the unitary transform
//   f_hat(k) = (1/sqrt(2 pi)) int e^{-i k x} f(x) dx,
// bins ordered by ascending wavenumber.
struct Spectrum {
  std::vector<double> wavenumbers;
  std::vector<std::complex<double>> coefficients;
  double dk = 0.0;
  bool decay_warning = false;
};

Spectrum spectrum(const GridState& g);

// Closed-form transform of the C^1 glued profile of speed c:
//   -c / (sqrt(2 pi) (1 + k^2) (2 - i k)),
// so |.|^2 = c^2 / (2 pi ((k^3+k)^2 + (2k^2+2)^2)).
std::complex<double> theta_hat_analytic(double k, double c);

// sqrt( sum (1 + k^2)^s |f_hat(k)|^2 dk )
double hs_norm(const Spectrum& sp, double s);

// Windowed H^1 norm sqrt( int_a^b (u^2 + u_x^2) dx ) from exact jets.
double h1_norm_window(const AnalyticField& field, double t, double a, double b);

}  // namespace pklab
