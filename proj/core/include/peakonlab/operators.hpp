#pragma once

#include "peakonlab/expfield.hpp"
#include "peakonlab/grid.hpp"

namespace pklab {

// One-sided exponential moving sums, the shared machinery of every
// kernel here.  sweep_left returns
//   L_i = int_{-inf}^{x_i} e^{-k (x_i - y)} f(y) dy
// and sweep_right returns
//   R_i = int_{x_i}^{inf} e^{-k (y - x_i)} f(y) dy
// via first-order recurrences with cubic-interpolant panel weights
// (4-point stencil, exact for the exponential factor).  Open grids treat
// f as zero outside the box; periodic grids close the recurrence with the
// geometric factor 1/(1 - e^{-k n h}).
std::vector<double> sweep_left(const GridState& g, double k);
std::vector<double> sweep_right(const GridState& g, double k);

// Lambda^{-2} f = (e^{-|x|}/2) * f.  Normalized so that constants are
// fixed points on periodic grids.
GridState helmholtz_inverse(const GridState& g);

// d/dx Lambda^{-2} f, i.e. convolution with -sgn(x) e^{-|x|}/2.
GridState helmholtz_inverse_dx(const GridState& g);

// Transform-based Lambda^{-2} for periodic grids (division by 1 + k^2);
// cross-check path for the recurrence implementation.
GridState helmholtz_inverse_fft(const GridState& g);

// v = 2 u_x - 4 u.  The field form is exact (piecewise-exponential jets
// transform in closed form, crest lines carried over); the grid form uses
// the spectral derivative on periodic grids and a 4th-order difference
// otherwise.
FieldPtr miura_forward(const FieldPtr& field);
GridState miura_forward(const GridState& g);

// T_g v with g(x) = -e^{2x} H(-x) / 2:
//   (T_g v)(x) = -1/2 int_x^{inf} e^{2(x-y)} v(y) dy.
// Sets *decay_warning when the right-edge samples are not negligible
// (the one-sided kernel relies on decay there).
GridState miura_inverse(const GridState& g, bool* decay_warning = nullptr);

}  // namespace pklab
