#include "peakonlab/expfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pklab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// integral of e^{k y} over (a, b), with infinite endpoints allowed when the
// exponential decays there
double exp_integral(double k, double a, double b) {
  if (a >= b) return 0.0;
  if (k == 0.0) return b - a;
  const double upper = std::isinf(b) ? (k < 0.0 ? 0.0 : kInf) : std::exp(k * b);
  const double lower = std::isinf(a) ? (k > 0.0 ? 0.0 : kInf) : std::exp(k * a);
  return (upper - lower) / k;
}

}  // namespace

std::vector<double> PiecewiseExpField::crest_positions(double t) const {
  check_time(t);
  return layout(t).crests;
}

Jet PiecewiseExpField::eval(double x, double t, Side side) const {
  const ExpLayout lay = layout(t);
  std::size_t region = 0;
  for (double q : lay.crests) {
    if (x > q || (x == q && side == Side::Right)) ++region;
  }

  Jet j;
  j.x = x;
  j.t = t;
  for (const MovingExp& term : lay.regions[region]) {
    const double e = std::exp(term.rate * (x - term.q));
    const double base = term.amp * e;
    const double tbase = (term.damp - term.rate * term.dq * term.amp) * e;
    double rb = 1.0;
    for (int b = 0; b <= 4; ++b) {
      j.d[0][b] += rb * base;
      j.d[1][b] += rb * tbase;
      rb *= term.rate;
    }
  }
  return j;
}

std::vector<ExpRegion> PiecewiseExpField::regions(double t, int deriv_order) const {
  check_time(t);
  const ExpLayout lay = layout(t);
  std::vector<ExpRegion> out(lay.regions.size());
  for (std::size_t i = 0; i < lay.regions.size(); ++i) {
    out[i].lo = (i == 0) ? -kInf : lay.crests[i - 1];
    out[i].hi = (i == lay.crests.size()) ? kInf : lay.crests[i];
    for (const MovingExp& term : lay.regions[i]) {
      double coef = term.amp * std::exp(-term.rate * term.q);
      for (int k = 0; k < deriv_order; ++k) coef *= term.rate;
      if (coef != 0.0) out[i].terms.push_back({coef, term.rate});
    }
  }
  return out;
}

std::vector<ExpRegion> multiply_regions(const std::vector<ExpRegion>& a,
                                        const std::vector<ExpRegion>& b) {
  if (a.size() != b.size()) throw InvalidParamsError("region lists do not match");
  std::vector<ExpRegion> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].lo != b[i].lo || a[i].hi != b[i].hi)
      throw InvalidParamsError("region breakpoints do not match");
    out[i].lo = a[i].lo;
    out[i].hi = a[i].hi;
    for (const AbsExpTerm& ta : a[i].terms)
      for (const AbsExpTerm& tb : b[i].terms)
        out[i].terms.push_back({ta.coef * tb.coef, ta.rate + tb.rate});
  }
  return out;
}

std::vector<ExpRegion> scale_regions(std::vector<ExpRegion> r, double s) {
  for (ExpRegion& reg : r)
    for (AbsExpTerm& term : reg.terms) term.coef *= s;
  return r;
}

std::vector<ExpRegion> add_regions(const std::vector<ExpRegion>& a,
                                   const std::vector<ExpRegion>& b) {
  if (a.size() != b.size()) throw InvalidParamsError("region lists do not match");
  std::vector<ExpRegion> out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].lo != b[i].lo || a[i].hi != b[i].hi)
      throw InvalidParamsError("region breakpoints do not match");
    out[i].terms.insert(out[i].terms.end(), b[i].terms.begin(), b[i].terms.end());
  }
  return out;
}

double conv_helmholtz_exact(const std::vector<ExpRegion>& f, double x) {
  // (g * f)(x) with g = e^{-|x|}/2, split at y = x:
  //   1/2 [ e^{-x} int_{y<x} e^{y} f(y) dy + e^{x} int_{y>x} e^{-y} f(y) dy ]
  // The exponentials are grouped per term to keep the arguments moderate.
  double acc = 0.0;
  for (const ExpRegion& reg : f) {
    for (const AbsExpTerm& term : reg.terms) {
      // left of x: integrand coef * e^{(1+rate) y - x}
      {
        const double b = std::min(reg.hi, x);
        if (reg.lo < b) {
          const double k = 1.0 + term.rate;
          double v;
          if (k == 0.0) {
            v = (b - reg.lo) * std::exp(-x);
          } else {
            const double upper = std::exp(k * b - x);
            const double lower = std::isinf(reg.lo) ? (k > 0.0 ? 0.0 : kInf)
                                                    : std::exp(k * reg.lo - x);
            v = (upper - lower) / k;
          }
          acc += 0.5 * term.coef * v;
        }
      }
      // right of x: integrand coef * e^{(rate-1) y + x}
      {
        const double a = std::max(reg.lo, x);
        if (a < reg.hi) {
          const double k = term.rate - 1.0;
          double v;
          if (k == 0.0) {
            v = (reg.hi - a) * std::exp(x);
          } else {
            const double upper = std::isinf(reg.hi) ? (k < 0.0 ? 0.0 : kInf)
                                                    : std::exp(k * reg.hi + x);
            const double lower = std::exp(k * a + x);
            v = (upper - lower) / k;
          }
          acc += 0.5 * term.coef * v;
        }
      }
    }
  }
  if (!std::isfinite(acc)) throw NonFiniteError("exponential convolution diverged");
  return acc;
}

double integrate_regions(const std::vector<ExpRegion>& f, double lo, double hi) {
  double acc = 0.0;
  for (const ExpRegion& reg : f) {
    const double a = std::max(reg.lo, lo);
    const double b = std::min(reg.hi, hi);
    if (a >= b) continue;
    for (const AbsExpTerm& term : reg.terms) acc += term.coef * exp_integral(term.rate, a, b);
  }
  if (!std::isfinite(acc)) throw NonFiniteError("exponential integral diverged");
  return acc;
}

}  // namespace pklab
