#include "peakonlab/pde.hpp"

#include <cmath>

#include "peakonlab/fft.hpp"
#include "peakonlab/operators.hpp"

namespace pklab {

double local_rhs(const Jet& j) {
  return 16.0 * j.u() * j.ux() - 8.0 * j.ux() * j.uxx() + 2.0 * j.uxx() * j.uxx() -
         4.0 * j.u() * j.uxxx() + 2.0 * j.ux() * j.uxxx();
}

double residual_local(const Jet& j) { return j.ut() - j.utxx() - local_rhs(j); }

namespace {

double residual_r412(double alpha, double beta, const ThetaJet& tj) {
  const double a = alpha, b = beta, z = tj.z;
  const double t = tj.th, t1 = tj.th1, t2 = tj.th2, t3 = tj.th3;
  const double z2 = z * z, z3 = z2 * z, z4 = z2 * z2;
  return a * a * (a * a - 4.0 * b * b) * t1 -
         a * a * b * b * z * (5.0 * t2 + z * t3) +
         4.0 * b * (4.0 * a * a * a - 3.0 * a * b * b - b * b * b) * t * t -
         8.0 * b * b * b * (3.0 * a + 4.0 * b) * z2 * t1 * t1 -
         2.0 * b * b * b * b * z4 * t2 * t2 +
         4.0 * b * (4.0 * a * a * a - 15.0 * a * b * b - 7.0 * b * b * b) * z * t * t1 -
         16.0 * b * b * b * (2.0 * a + b) * z2 * t * t2 -
         2.0 * b * b * b * (2.0 * a + b) * z3 * t * t3 -
         8.0 * b * b * b * (a + 3.0 * b) * z3 * t1 * t2 -
         2.0 * b * b * b * b * z4 * t1 * t3;
}

// Note the (-3 alpha + 4) coefficient: the beta = 1 slice of the general
// family above would give -(3 alpha + 4) instead.  Both variants are kept
// side by side; the discrepancy is covered by tests.
double residual_r414(double alpha, const ThetaJet& tj) {
  const double a = alpha, z = tj.z;
  const double t = tj.th, t1 = tj.th1, t2 = tj.th2, t3 = tj.th3;
  const double z2 = z * z, z3 = z2 * z, z4 = z2 * z2;
  return a * a * (a * a - 4.0) * t1 - a * a * z * (5.0 * t2 + z * t3) +
         4.0 * (4.0 * a * a * a - 3.0 * a - 1.0) * t * t -
         8.0 * (-3.0 * a + 4.0) * z2 * t1 * t1 - 2.0 * z4 * t2 * t2 +
         4.0 * (4.0 * a * a * a - 15.0 * a - 7.0) * z * t * t1 -
         16.0 * (2.0 * a + 1.0) * z2 * t * t2 - 8.0 * (a + 3.0) * z3 * t1 * t2 -
         2.0 * (2.0 * a + 1.0) * z3 * t * t3 - 2.0 * z4 * t1 * t3;
}

double residual_r416(double c, const ThetaJet& tj) {
  const double t = tj.th, t1 = tj.th1, t2 = tj.th2, t3 = tj.th3;
  return -c * (t1 - t3) - 16.0 * t * t1 + 8.0 * t1 * t2 - 2.0 * t2 * t2 +
         4.0 * t * t3 - 2.0 * t1 * t3;
}

double residual_r424(double c, double c1, const ThetaJet& tj) {
  const double t = tj.th, t1 = tj.th1, t2 = tj.th2;
  return -c * (t - t2) - 8.0 * t * t + 2.0 * t1 * t1 - 2.0 * t1 * t2 +
         4.0 * t * t2 - c1;
}

}  // namespace

double residual_reduced(const ReducedOdeKind& kind, const ThetaJet& tj) {
  if (!std::isfinite(tj.th) || !std::isfinite(tj.th1) || !std::isfinite(tj.th2) ||
      !std::isfinite(tj.th3) || !std::isfinite(tj.z))
    throw NonFiniteError("theta jet is not finite");
  switch (kind.name) {
    case ReducedOdeName::R412:
      if (kind.alpha == 0.0) throw InvalidParamsError("reduced form needs alpha != 0");
      return residual_r412(kind.alpha, kind.beta, tj);
    case ReducedOdeName::R414:
      if (kind.alpha == 0.0) throw InvalidParamsError("reduced form needs alpha != 0");
      return residual_r414(kind.alpha, tj);
    case ReducedOdeName::R416:
      return residual_r416(kind.c, tj);
    case ReducedOdeName::R424:
      return residual_r424(kind.c, kind.c1, tj);
  }
  throw InvalidParamsError("unknown reduced form");
}

GridState rhs_nonlocal(const GridState& state, NonlocalEq which,
                       DerivativeMode mode) {
  state.validate();
  if (!state.periodic)
    throw InvalidParamsError("nonlocal evolution needs a periodic box");

  const std::size_t n = state.size();
  const GridState ux = mode == DerivativeMode::Spectral
                           ? spectral_derivative(state, 1)
                           : central4_derivative(state);
  GridState out = state;
  if (which == NonlocalEq::Novikov16) {
    GridState quad = state;  // 6 u^2 + 2 u_x^2
    GridState uxsq = state;  // u_x^2
    for (std::size_t i = 0; i < n; ++i) {
      const double u = state.samples[i], d = ux.samples[i];
      quad.samples[i] = 6.0 * u * u + 2.0 * d * d;
      uxsq.samples[i] = d * d;
    }
    const GridState conv_dx = helmholtz_inverse_dx(quad);
    const GridState conv = helmholtz_inverse(uxsq);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = state.samples[i], d = ux.samples[i];
      out.samples[i] = 4.0 * u * d - d * d + conv_dx.samples[i] + conv.samples[i];
    }
  } else {
    GridState vsq = state;
    for (std::size_t i = 0; i < n; ++i)
      vsq.samples[i] = state.samples[i] * state.samples[i];
    const GridState conv_dx = helmholtz_inverse_dx(vsq);
    for (std::size_t i = 0; i < n; ++i)
      out.samples[i] =
          -state.samples[i] * ux.samples[i] - 1.5 * conv_dx.samples[i];
  }
  for (double v : out.samples)
    if (!std::isfinite(v)) throw NonFiniteError("nonlocal right-hand side is not finite");
  return out;
}

}  // namespace pklab
