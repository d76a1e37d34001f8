#pragma once

#include <array>
#include <utility>
#include <vector>

#include "peakonlab/jets.hpp"

namespace pklab {

// Amplitudes of the glued three-exponential ansatz
//   u = p1 e^{q-x} H(x-q) + (p2 e^{x-q} + p3 e^{2(x-q)}) H(q-x)
// with the continuity constraint p1 = p2 + p3.
struct SinglePeakonState {
  double p1 = 0.0, p2 = 0.0, p3 = 0.0, q = 0.0;

  static SinglePeakonState make(double p2, double p3, double q);
  void validate() const;
};

struct SingleDerivs {
  double dp2 = 0.0, dp3 = 0.0, dq = 0.0;
};

// The implicit amplitude system, solved as a 3x3 linear system for
// (p2', p3', q').  Throws SingularSystemError when the system degenerates.
SingleDerivs single_rhs(const SinglePeakonState& s);

// Closed-form trajectory:
//   p1 = (1/6)/(t-t0) - c/6,  p2 = -(1/2)/(t-t0) - c/2,
//   p3 = (2/3)/(t-t0) + c/3,  q = c t + q0.
SinglePeakonState single_closed_form(double t, double c, double t0, double q0);

struct TwoPeakonState {
  double p1 = 0.0, p2 = 0.0, q1 = 0.0, q2 = 0.0;
  void validate() const;
};

// p2 = c1/(e^{k1 + 2 c1 t + 2 c2} - 1), p1 = -p2,
// q1 = k1 + c2 + c1 t, q2 = -c2 - c1 t.
TwoPeakonState two_closed_form(double t, double c1, double c2, double k1);

struct TwoDerivs {
  double dp1 = 0.0, dp2 = 0.0, dq1 = 0.0, dq2 = 0.0;
};

// Left-hand sides of the six coupled amplitude/crest equations at the
// given state and candidate derivatives (the system is overdetermined;
// trajectories are verified, not integrated).
std::array<double, 6> two_residual(const TwoPeakonState& s, const TwoDerivs& d);

// Snapshot of the ansatz as a piecewise-exponential field.  The spatial
// jets are exact; the time direction is frozen (this is a fixed-time
// profile, not a spacetime solution).
FieldPtr assemble_field(const SinglePeakonState& s);
FieldPtr assemble_field(const TwoPeakonState& s);

enum class OdeStatus { Completed, BlowUp, Singular };

struct SingleTrajectory {
  std::vector<double> times;
  std::vector<SinglePeakonState> states;
  OdeStatus status = OdeStatus::Completed;
  double t_detect = 0.0;  // meaningful for BlowUp / Singular
};

struct SingleOdeConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  double blowup_threshold = 1e6;
};

// RK4 on single_rhs with step halving when amplitudes grow quickly; stops
// with BlowUp status when any amplitude passes the threshold.
SingleTrajectory integrate_single(const SinglePeakonState& init,
                                  const SingleOdeConfig& config);

}  // namespace pklab
