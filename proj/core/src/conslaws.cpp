#include "peakonlab/conslaws.hpp"

#include <algorithm>
#include <cmath>

#include "peakonlab/expfield.hpp"
#include "peakonlab/fft.hpp"
#include "peakonlab/pde.hpp"

namespace pklab {

namespace {

using DualJet = Dual[2][5];

void load(DualJet& out, const Jet& j) {
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 4; ++b) out[a][b] = Dual(j.d[a][b]);
}

// D_x F = F_x + sum F_{u_ab} u_{a,b+1};  D_t F = sum F_{u_ab} u_{a+1,b}.
// One dual pass per seed direction.
template <typename F>
double total_dx(F&& f, const Jet& j) {
  DualJet d;
  load(d, j);
  double acc = 0.0;
  {
    const Dual x(j.x, 1.0);
    acc += f(x, d).d;
  }
  const Dual x(j.x, 0.0);
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 4; ++b) {
      d[a][b].d = 1.0;
      const double partial = f(x, d).d;
      d[a][b].d = 0.0;
      if (partial == 0.0) continue;
      if (b == 4)
        throw InvalidParamsError("current depends on a jet entry of maximal x-order");
      acc += partial * j.d[a][b + 1];
    }
  }
  return acc;
}

template <typename F>
double total_dt(F&& f, const Jet& j) {
  DualJet d;
  load(d, j);
  const Dual x(j.x, 0.0);
  double acc = 0.0;
  for (int b = 0; b <= 4; ++b) {
    d[0][b].d = 1.0;
    const double partial = f(x, d).d;
    d[0][b].d = 0.0;
    if (partial != 0.0) acc += partial * j.d[1][b];
  }
  for (int b = 0; b <= 4; ++b) {
    d[1][b].d = 1.0;
    const double partial = f(x, d).d;
    d[1][b].d = 0.0;
    if (partial != 0.0)
      throw InvalidParamsError("density depends on a t-derivative jet entry");
  }
  return acc;
}

}  // namespace

double identity_residual(int law_index, const AnalyticField& field, double x,
                         double t) {
  const Jet j = field.jet_at(x, t);
  const double dt_c0 = total_dt(
      [law_index](const Dual& xx, const DualJet& d) { return law_c0(law_index, xx, d); }, j);
  const double dx_c1 = total_dx(
      [law_index](const Dual& xx, const DualJet& d) { return law_c1(law_index, xx, d); }, j);
  double dd[2][5];
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 4; ++b) dd[a][b] = j.d[a][b];
  const double phi = law_phi(law_index, j.x, dd);
  return dt_c0 + dx_c1 - phi * residual_local(j);
}

const char* quantity_name(QuantityIndex idx) {
  switch (idx) {
    case QuantityIndex::Q0: return "Q0";
    case QuantityIndex::Q1: return "Q1";
    case QuantityIndex::E2: return "E2";
    case QuantityIndex::H2: return "H2";
    case QuantityIndex::H3: return "H3";
    case QuantityIndex::H4: return "H4";
  }
  throw InvalidParamsError("unknown quantity");
}

namespace {

double density(QuantityIndex idx, double x, double u, double ux) {
  switch (idx) {
    case QuantityIndex::Q0: return u;
    case QuantityIndex::Q1: return std::exp(2.0 * x) * u;
    case QuantityIndex::E2: return u * u;
    case QuantityIndex::H2: return 0.5 * (u * u + ux * ux);
    case QuantityIndex::H3:
      return (-4.0 / 3.0) * u * u * u + (1.0 / 6.0) * ux * ux * ux - u * ux * ux;
    case QuantityIndex::H4:
      return std::exp(-2.0 * x) *
             (u * u * u + u * ux * ux + (1.0 / 3.0) * ux * ux * ux);
  }
  throw InvalidParamsError("unknown quantity");
}

double density_from_jet(QuantityIndex idx, const Jet& j) {
  return density(idx, j.x, j.u(), j.ux());
}

// x-derivative of the density, for trapezoid endpoint corrections.
double density_dx(QuantityIndex idx, const Jet& j) {
  const double x = j.x, u = j.u(), ux = j.ux(), uxx = j.uxx();
  switch (idx) {
    case QuantityIndex::Q0: return ux;
    case QuantityIndex::Q1: return std::exp(2.0 * x) * (2.0 * u + ux);
    case QuantityIndex::E2: return 2.0 * u * ux;
    case QuantityIndex::H2: return u * ux + ux * uxx;
    case QuantityIndex::H3:
      return -4.0 * u * u * ux + 0.5 * ux * ux * uxx - ux * ux * ux -
             2.0 * u * ux * uxx;
    case QuantityIndex::H4:
      return std::exp(-2.0 * x) *
             (-2.0 * (u * u * u + u * ux * ux + (1.0 / 3.0) * ux * ux * ux) +
              3.0 * u * u * ux + ux * ux * ux + 2.0 * u * ux * uxx +
              ux * ux * uxx);
  }
  throw InvalidParamsError("unknown quantity");
}

bool needs_ux(QuantityIndex idx) {
  return idx == QuantityIndex::H2 || idx == QuantityIndex::H3 ||
         idx == QuantityIndex::H4;
}

bool weighted(QuantityIndex idx) {
  return idx == QuantityIndex::Q1 || idx == QuantityIndex::H4;
}

constexpr double kGaussNode[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                  0.5384693101056831, 0.9061798459386640};
constexpr double kGaussWeight[5] = {0.2369268850561891, 0.4786286704993665,
                                    0.5688888888888889, 0.4786286704993665,
                                    0.2369268850561891};

double gauss_panel(QuantityIndex idx, const AnalyticField& field, double t,
                   double a, double b, Side side) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 5; ++i) {
    const Jet j = field.jet_one_sided(mid + half * kGaussNode[i], t, side);
    acc += kGaussWeight[i] * density_from_jet(idx, j);
  }
  return acc * half;
}

}  // namespace

QuantityResult quantity(QuantityIndex idx, const GridState& state) {
  state.validate();
  const std::size_t n = state.size();
  GridState ux = state;
  if (needs_ux(idx))
    ux = state.periodic ? spectral_derivative(state, 1) : central4_derivative(state);
  else
    std::fill(ux.samples.begin(), ux.samples.end(), 0.0);

  QuantityResult res;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double f = density(idx, state.x(i), state.samples[i], ux.samples[i]);
    if (!state.periodic && (i == 0 || i + 1 == n)) f *= 0.5;
    acc += f;
  }
  res.value = acc * state.h;

  const double edge = std::max(
      std::abs(density(idx, state.x(0), state.samples[0], ux.samples[0])),
      std::abs(density(idx, state.x(n - 1), state.samples[n - 1], ux.samples[n - 1])));
  const double plain =
      std::max(std::abs(state.samples[0]), std::abs(state.samples[n - 1]));
  res.decay_warning = (weighted(idx) ? edge : plain) > 1e-10;
  return res;
}

QuantityResult quantity(QuantityIndex idx, const AnalyticField& field, double t,
                        double L, std::size_t n) {
  if (!(L > 0.0) || n < 16) throw InvalidParamsError("quadrature needs L > 0, n >= 16");
  const double h = 2.0 * L / static_cast<double>(n - 1);

  std::vector<double> crests;
  for (double q : field.crest_positions(t))
    if (q > -L && q < L) crests.push_back(q);
  std::sort(crests.begin(), crests.end());

  auto node_x = [&](std::size_t i) { return -L + h * static_cast<double>(i); };
  auto on_crest = [&](double x) {
    return std::binary_search(crests.begin(), crests.end(), x);
  };

  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = node_x(i);
    double f;
    if (on_crest(x)) {
      f = 0.5 * (density_from_jet(idx, field.jet_one_sided(x, t, Side::Left)) +
                 density_from_jet(idx, field.jet_one_sided(x, t, Side::Right)));
    } else {
      f = density_from_jet(idx, field.jet_one_sided(x, t, Side::Right));
    }
    if (i == 0 || i + 1 == n) f *= 0.5;
    acc += f;
  }
  acc *= h;

  // Euler-Maclaurin endpoint correction for the whole box ...
  const double fp_left = density_dx(idx, field.jet_one_sided(-L, t, Side::Right));
  const double fp_right = density_dx(idx, field.jet_one_sided(L, t, Side::Left));
  double corr = fp_right - fp_left;

  // ... plus, per crest, the corrections from splitting the box into
  // smooth pieces and an exact treatment of the crest-straddling panel.
  for (double q : crests) {
    const double pos = (q + L) / h;
    const auto jidx = static_cast<std::size_t>(std::floor(pos));
    const double xj = node_x(jidx);
    if (q == xj) {
      // crest on a node: only the derivative jump enters
      corr += density_dx(idx, field.jet_one_sided(q, t, Side::Left)) -
              density_dx(idx, field.jet_one_sided(q, t, Side::Right));
      continue;
    }
    const double xj1 = node_x(jidx + 1);
    corr += density_dx(idx, field.jet_one_sided(xj, t, Side::Left)) -
            density_dx(idx, field.jet_one_sided(xj1, t, Side::Right));
    // replace the trapezoid estimate of the straddling panel by split
    // Gauss panels on each side of the crest
    const double trap =
        0.5 * h *
        (density_from_jet(idx, field.jet_one_sided(xj, t, Side::Left)) +
         density_from_jet(idx, field.jet_one_sided(xj1, t, Side::Right)));
    acc -= trap;
    acc += gauss_panel(idx, field, t, xj, q, Side::Left);
    acc += gauss_panel(idx, field, t, q, xj1, Side::Right);
  }
  acc -= h * h / 12.0 * corr;

  QuantityResult res;
  res.value = acc;
  const Jet jl = field.jet_one_sided(-L, t, Side::Right);
  const Jet jr = field.jet_one_sided(L, t, Side::Left);
  const double edge = weighted(idx)
                          ? std::max(std::abs(density_from_jet(idx, jl)),
                                     std::abs(density_from_jet(idx, jr)))
                          : std::max(std::abs(jl.u()), std::abs(jr.u()));
  res.decay_warning = edge > 1e-10;
  return res;
}

double drift(const std::vector<std::pair<double, double>>& series) {
  if (series.empty()) throw EmptySeriesError("drift of an empty series");
  const double v0 = series.front().second;
  const double scale = std::max(std::abs(v0), 1e-30);
  double worst = 0.0;
  for (const auto& [t, v] : series) worst = std::max(worst, std::abs(v - v0));
  return worst / scale;
}

}  // namespace pklab
