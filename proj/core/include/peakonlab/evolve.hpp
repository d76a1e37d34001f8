#pragma once

#include <vector>

#include "peakonlab/conslaws.hpp"
#include "peakonlab/grid.hpp"
#include "peakonlab/pde.hpp"

namespace pklab {

struct EvolveConfig {
  NonlocalEq equation = NonlocalEq::Novikov16;
  double L = 30.0;
  std::size_t n = 1024;
  double dt = 1e-3;
  double t_end = 1.0;
  std::size_t monitor_every = 10;
  double blowup_threshold = 1e6;
  DerivativeMode mode = DerivativeMode::Spectral;

  void validate() const;
};

struct MonitorRow {
  double t = 0.0;
  double Q0 = 0.0, E2 = 0.0, H2 = 0.0;
  double sup = 0.0;
};

enum class EvolveStatus { Completed, BlowUp, NonFinite };

struct Trajectory {
  std::vector<double> times;       // monitored times
  std::vector<GridState> states;   // states at monitored times
  std::vector<MonitorRow> monitors;
  EvolveStatus status = EvolveStatus::Completed;
  double t_detect = 0.0;  // meaningful for BlowUp / NonFinite
};

// Fixed-step RK4 on the periodic nonlocal form.  Every step the sup norm
// and finiteness are checked; crossing blowup_threshold stops the run with
// BlowUp status and the detection time (a result, not an error).
Trajectory evolve(const GridState& initial, const EvolveConfig& config);

// Jump-carrying single-crest profile
//   u = (m - s) e^{x-q} for x < q,  (m + s) e^{-(x-q)} for x > q,
// i.e. a smooth crest of height m plus a jump of 2s at x = q.  The method
// of lines cannot follow this data: a spectral or difference grid relaxes
// the (inadmissible, growing) jump toward the entropy branch instead of
// amplifying it.  The jump parameters instead obey the closed system
//   m' = 0,  q' = m,  s' = s^2,
// which evolve_shock advances with the same stepper and blow-up
// bookkeeping as the grid path; monitored states are sampled profiles.
struct ShockState {
  double m = 0.0, s = 0.0, q = 0.0;
};

Trajectory evolve_shock(const ShockState& init, const EvolveConfig& config);

// Speed of the moving extremum: least-squares slope through the
// parabola-refined argmax of |u| at the monitored times.  Throws
// FlatFieldError when the field is too small to locate a crest.
double crest_speed(const Trajectory& traj);

}  // namespace pklab
