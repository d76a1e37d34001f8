#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <vector>

#include "peakonlab/errors.hpp"

namespace pklab {

// Jet of a field at one space-time point: all partial derivatives
// d_t^a d_x^b u with a <= 1, b <= 4.  This order cap is the maximal
// requirement of any implemented pointwise expression:
//   - PDE residual:            u_t, u_txx, u up to u_xxx
//   - currents C^1 and D_x C^1: up to u_txx and u_xxx (law 4/5: u_txxx)
//   - one-forms and D_x of the dt-coefficient: up to u_xxxx
struct Jet {
  double x = 0.0;
  double t = 0.0;
  // d[a][b] = d_t^a d_x^b u
  std::array<std::array<double, 5>, 2> d{};

  double u() const { return d[0][0]; }
  double ux() const { return d[0][1]; }
  double uxx() const { return d[0][2]; }
  double uxxx() const { return d[0][3]; }
  double uxxxx() const { return d[0][4]; }
  double ut() const { return d[1][0]; }
  double utx() const { return d[1][1]; }
  double utxx() const { return d[1][2]; }
  double utxxx() const { return d[1][3]; }
  double utxxxx() const { return d[1][4]; }

  bool finite() const {
    for (const auto& row : d)
      for (double v : row)
        if (!std::isfinite(v)) return false;
    return true;
  }
};

enum class Side { Left, Right };

// A field with closed-form jets.  Piecewise-analytic fields have crest
// lines x = q(t); jet_at refuses to evaluate on them, jet_one_sided takes
// the limit from the requested side.
class AnalyticField {
 public:
  virtual ~AnalyticField() = default;

  Jet jet_at(double x, double t) const;
  Jet jet_one_sided(double x, double t, Side side) const;

  // Field value; on a crest line returns the average of the one-sided
  // limits (consistent with the H(0) = 1/2 convention).
  double value(double x, double t) const;

  virtual std::vector<double> crest_positions(double /*t*/) const { return {}; }

  // Throws BlowUpDomainError when the family is not defined at t.
  void check_sample_time(double t) const { check_time(t); }

 protected:
  // Throws BlowUpDomainError when the family is not defined at t.
  virtual void check_time(double /*t*/) const {}
  virtual Jet eval(double x, double t, Side side) const = 0;

  friend class TransformedField;
};

using FieldPtr = std::shared_ptr<const AnalyticField>;

}  // namespace pklab
