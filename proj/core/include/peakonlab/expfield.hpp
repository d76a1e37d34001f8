#pragma once

#include <vector>

#include "peakonlab/jets.hpp"

namespace pklab {

// One exponential building block: amp(t) * exp(rate * (x - q(t))).
// amp/damp and q/dq are the amplitude, crest position and their time
// derivatives evaluated at the layout time, so the full (a<=1, b<=4) jet
// of the term is closed-form:
//   d_x^b  = rate^b * amp * e^{rate (x-q)}
//   d_t d_x^b = rate^b * (damp - rate * dq * amp) * e^{rate (x-q)}
struct MovingExp {
  double amp = 0.0;
  double damp = 0.0;
  double rate = 0.0;
  double q = 0.0;
  double dq = 0.0;
};

// Piecewise layout at a fixed time: region i covers (crests[i-1], crests[i]).
struct ExpLayout {
  std::vector<double> crests;  // strictly increasing
  std::vector<std::vector<MovingExp>> regions;  // size crests.size() + 1
};

// A term written in absolute coordinates, coef * e^{rate * x}.
struct AbsExpTerm {
  double coef = 0.0;
  double rate = 0.0;
};

// One smooth region, for closed-form integration/convolution.
struct ExpRegion {
  double lo = 0.0;  // -inf encoded as -infinity()
  double hi = 0.0;
  std::vector<AbsExpTerm> terms;
};

// Base class for every catalog family: sums of moving exponentials,
// piecewise between crest lines.
class PiecewiseExpField : public AnalyticField {
 public:
  std::vector<double> crest_positions(double t) const override;

  // Regions of u(.,t) in absolute coordinates (for exact quadrature and
  // exponential-kernel convolution).  deriv_order differentiates in x.
  std::vector<ExpRegion> regions(double t, int deriv_order = 0) const;

  ExpLayout layout_at(double t) const {
    check_time(t);
    return layout(t);
  }

 protected:
  virtual ExpLayout layout(double t) const = 0;
  Jet eval(double x, double t, Side side) const override;
};

// Pointwise product of two piecewise-exponential region lists (e.g. u^2,
// u_x^2).  Regions must share identical breakpoints, which holds for the
// derivative orders of a single field.
std::vector<ExpRegion> multiply_regions(const std::vector<ExpRegion>& a,
                                        const std::vector<ExpRegion>& b);

std::vector<ExpRegion> scale_regions(std::vector<ExpRegion> r, double s);
std::vector<ExpRegion> add_regions(const std::vector<ExpRegion>& a,
                                   const std::vector<ExpRegion>& b);

// Exact convolution with the Helmholtz kernel e^{-|x|}/2 of a
// piecewise-exponential function given by regions.
double conv_helmholtz_exact(const std::vector<ExpRegion>& f, double x);

// Exact integral of a piecewise-exponential function over (lo, hi).
double integrate_regions(const std::vector<ExpRegion>& f, double lo, double hi);

}  // namespace pklab
