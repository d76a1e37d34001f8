#pragma once

#include <array>

#include "peakonlab/jets.hpp"

namespace pklab {

// Coefficients of the one-form triad w_i = f_{i1} dx + f_{i2} dt.
// The third form duplicates the second (w2 = w3) and the first is
// constant: f11 = -2, f12 = 0.
struct OneFormTriad {
  double f11 = -2.0, f12 = 0.0;
  double f21 = 0.0, f22 = 0.0;
  double f31 = 0.0, f32 = 0.0;
};

OneFormTriad triad(const Jet& j);

// dx^dt coefficients of (dw1 - w3^w2, dw2 - w1^w3, dw3 - w1^w2).
// The first vanishes identically; the others vanish exactly on solutions
// and equal (2 - d_x) of the local residual off-shell.
std::array<double, 3> structure_residuals(const AnalyticField& field, double x,
                                          double t);

// dx^dt coefficient of w1^w2: 2 d_x (2 - d_x) (u_x - 2u)^2.  Nonzero
// means the point is generic (the triad defines a surface chart there).
double genericity(const Jet& j);

struct MetricCoefficients {
  double E = 0.0, F = 0.0, G = 0.0;
  bool admissible() const { return E > 0.0 && E * G - F * F > 1e-12; }
};

// First fundamental form g = w1^2 + w2^2:
//   E = 4 + f21^2,  F = f21 f22,  G = f22^2.
MetricCoefficients metric(const Jet& j);

// Gaussian curvature by the Brioschi formula with 4th-order central
// differences of (E, F, G) on a 5x5 stencil of spacing h.  Throws
// DegenerateMetricError when E G - F^2 <= 1e-12 anywhere on the stencil.
double curvature(const AnalyticField& field, double x, double t,
                 double h = 1e-3);

}  // namespace pklab
