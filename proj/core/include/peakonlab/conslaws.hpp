#pragma once

#include <utility>
#include <vector>

#include "peakonlab/dual.hpp"
#include "peakonlab/grid.hpp"
#include "peakonlab/jets.hpp"

namespace pklab {

// The five conservation laws in characteristic form: multipliers phi and
// current pairs (C0, C1) with D_t C0 + D_x C1 = phi * E off-shell, E the
// local residual.  Law 2's current pair is carried rescaled by -3
// relative to its usual tabulation so that it pairs with phi = e^{2x}
// (the unscaled pair matches phi = -e^{2x}/3; verified symbolically).
//
// The evaluators are templated over the scalar so that forward-mode dual
// numbers can extract the partials needed for total derivatives.

template <typename T>
T law_phi(int index, const T& x, const T (&d)[2][5]) {
  using std::exp;
  const T &u = d[0][0], &ux = d[0][1], &uxx = d[0][2];
  const T &ut = d[1][0], &utx = d[1][1];
  switch (index) {
    case 1:
      return T(1.0);
    case 2:
      return exp(2.0 * x);
    case 3:
      return u;
    case 4:
      return -4.0 * u * u + ux * ux + 2.0 * u * uxx - ux * uxx - 0.5 * utx;
    case 5:
      return exp(-2.0 * x) * (3.0 * u * u - 4.0 * u * ux - ux * ux + ut -
                              4.0 * u * uxx + 2.0 * ux * uxx + utx);
  }
  throw InvalidParamsError("law index must be 1..5");
}

template <typename T>
T law_c0(int index, const T& x, const T (&d)[2][5]) {
  using std::exp;
  const T &u = d[0][0], &ux = d[0][1];
  switch (index) {
    case 1:
      return u;
    case 2:
      return -3.0 * exp(2.0 * x) * u;
    case 3:
      return 0.5 * (u * u + ux * ux);
    case 4:
      return (-4.0 / 3.0) * u * u * u + (1.0 / 6.0) * ux * ux * ux - u * ux * ux;
    case 5:
      return -3.0 * exp(-2.0 * x) *
             (u * u * u + u * ux * ux + (1.0 / 3.0) * ux * ux * ux);
  }
  throw InvalidParamsError("law index must be 1..5");
}

template <typename T>
T law_c1(int index, const T& x, const T (&d)[2][5]) {
  using std::exp;
  const T &u = d[0][0], &ux = d[0][1], &uxx = d[0][2];
  const T &ut = d[1][0], &utx = d[1][1];
  switch (index) {
    case 1:
      return -8.0 * u * u + 2.0 * ux * ux + 4.0 * u * uxx - 2.0 * ux * uxx - utx;
    case 2:
      return -2.0 * exp(2.0 * x) *
             (4.0 * u * ux - 2.0 * u * uxx - 2.0 * ux * ux + ux * uxx +
              0.5 * utx - ut);
    case 3:
      return (-16.0 / 3.0) * u * u * u - 2.0 * u * ux * uxx +
             (2.0 / 3.0) * ux * ux * ux + 4.0 * u * u * uxx - u * utx;
    case 4:
      return 16.0 * u * u * u * u - 8.0 * u * u * ux * ux - 2.0 * u * utx * uxx -
             0.25 * ut * ut - 16.0 * u * u * u * uxx - 2.0 * ux * ux * ux * uxx -
             0.5 * ux * ux * ut + 4.0 * u * u * uxx * uxx + ux * ux * uxx * uxx +
             0.25 * utx * utx + 8.0 * u * u * ux * uxx - 4.0 * u * ux * uxx * uxx +
             4.0 * u * ux * ux * uxx + 2.0 * u * ux * ut + ux * uxx * utx +
             ux * ux * ux * ux + 4.0 * u * u * utx - ux * ux * utx;
    case 5:
      return 0.5 * exp(-2.0 * x) *
             (48.0 * u * u * u * ux + 24.0 * u * u * u * uxx +
              8.0 * u * u * ux * ux - 44.0 * u * u * ux * uxx -
              16.0 * u * u * uxx * uxx - 8.0 * u * ux * ux * ux +
              8.0 * u * ux * ux * uxx + 16.0 * u * ux * uxx * uxx -
              4.0 * ux * ux * ux * ux + 4.0 * ux * ux * ux * uxx -
              4.0 * ux * ux * uxx * uxx + 8.0 * u * ux * ut + 8.0 * u * ut * uxx +
              8.0 * u * uxx * utx + 2.0 * ux * ux * ut - 4.0 * ux * ut * uxx -
              4.0 * ux * uxx * utx - ut * ut - 2.0 * ut * utx - utx * utx +
              8.0 * u * ux * utx - 6.0 * u * u * utx - 12.0 * u * u * ut +
              2.0 * ux * ux * utx);
  }
  throw InvalidParamsError("law index must be 1..5");
}

// D_t C0 + D_x C1 - phi * E at (x, t); total derivatives by the chain
// rule over jet coordinates, partials by dual numbers.  Propagates
// CrestPointError from the field.
double identity_residual(int law_index, const AnalyticField& field, double x,
                         double t);

enum class QuantityIndex { Q0, Q1, E2, H2, H3, H4 };

const char* quantity_name(QuantityIndex idx);

struct QuantityResult {
  double value = 0.0;
  bool decay_warning = false;
};

// Quadrature of the named density over the grid box.  u_x comes from the
// spectral derivative (periodic) or a 4th-order difference (open).
QuantityResult quantity(QuantityIndex idx, const GridState& state);

// Field-backed quadrature on [-L, L] with n nodes: composite trapezoid
// with endpoint-derivative corrections and crest-split panels, so C^1
// crests do not spoil the O(h^4) accuracy.
QuantityResult quantity(QuantityIndex idx, const AnalyticField& field, double t,
                        double L, std::size_t n);

// max |v(t) - v0| / max(|v0|, 1e-30) over the series.
double drift(const std::vector<std::pair<double, double>>& series);

}  // namespace pklab
