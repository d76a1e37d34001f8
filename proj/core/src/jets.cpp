#include "peakonlab/jets.hpp"

#include <string>

namespace pklab {

Jet AnalyticField::jet_at(double x, double t) const {
  check_time(t);
  for (double q : crest_positions(t)) {
    if (x == q)
      throw CrestPointError("jet requested on crest line x = " + std::to_string(q) +
                            " at t = " + std::to_string(t));
  }
  Jet j = eval(x, t, Side::Right);
  if (!j.finite())
    throw NonFiniteError("non-finite jet at (" + std::to_string(x) + ", " + std::to_string(t) + ")");
  return j;
}

Jet AnalyticField::jet_one_sided(double x, double t, Side side) const {
  check_time(t);
  Jet j = eval(x, t, side);
  if (!j.finite())
    throw NonFiniteError("non-finite one-sided jet at (" + std::to_string(x) + ", " +
                         std::to_string(t) + ")");
  return j;
}

double AnalyticField::value(double x, double t) const {
  check_time(t);
  for (double q : crest_positions(t)) {
    if (x == q)
      return 0.5 * (eval(x, t, Side::Left).u() + eval(x, t, Side::Right).u());
  }
  return eval(x, t, Side::Right).u();
}

}  // namespace pklab
