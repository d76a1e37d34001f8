#pragma once

#include "peakonlab/expfield.hpp"
#include "peakonlab/jets.hpp"

namespace pklab {

// Smooth compactly supported test function
//   phi(x) = e^{-1/(1-xi^2)},  xi = (x - center)/width,  |xi| < 1.
struct Bump {
  double center = 0.0;
  double width = 1.0;

  double value(double x) const;
  double d1(double x) const;
  double d2(double x) const;
};

struct SpaceTimeBump {
  Bump space;
  Bump time;

  double value(double x, double t) const { return space.value(x) * time.value(t); }
  double dx(double x, double t) const { return space.d1(x) * time.value(t); }
  double dt(double x, double t) const { return space.value(x) * time.d1(t); }
};

// Weak form of the integrated traveling-wave equation:
//   -int (c Th + 8 Th^2 + 2 Th'^2) phi
//   +int Th'^2 phi'  +  int (c Th + 2 Th^2) phi''
// for the profile Th(z) = theta->value(z, 0).  Gauss panels split at the
// crest and support edges, doubled until the estimate is below tol.
double weak_residual_ode(const FieldPtr& theta, double c, const Bump& phi,
                         double tol = 1e-9);

// Space-time weak form of the nonlocal evolution equation:
//   int u(x,0) phi(x,0) dx
//   + int_0^T int ( L^{-2}(u_x^2) phi + u phi_t - 2 u^2 phi_x
//                   - u_x^2 phi - L^{-2}(6 u^2 + 2 u_x^2) phi_x )
// The field must be piecewise-exponential so the Helmholtz convolution
// can be taken in closed form per smooth piece.
double weak_residual_pde(const FieldPtr& field, const SpaceTimeBump& phi,
                         double T, double tol = 1e-7);

// Boundary-term functionals of the crest-excision argument: the weak-form
// integrals restricted to z > eps (plus) or z < -eps (minus) for the C^1
// glued profile of speed c.  As eps -> 0,
//   plus  -> -(c^2/36) phi(0) - (c^2/9) phi'(0)
//   minus -> +(c^2/36) phi(0) + (c^2/9) phi'(0).
double boundary_term_plus(double eps, double c, const Bump& phi, double tol = 1e-10);
double boundary_term_minus(double eps, double c, const Bump& phi, double tol = 1e-10);

// Helmholtz inverse of a piecewise-exponential function at x: exact
// kernel convolution for decaying data; single-region (entire-line
// smooth) inputs use the eigenvalue form coef/(1 - rate^2) instead, which
// extends the operator to exponentially growing strong solutions.
double helmholtz_pointwise(const std::vector<ExpRegion>& f, double x);

}  // namespace pklab
