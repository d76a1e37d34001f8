#include "peakonlab/geometry.hpp"

#include <cmath>

#include "peakonlab/dual.hpp"

namespace pklab {

namespace {

template <typename T>
T f21_expr(const T (&d)[2][5]) {
  const T &u = d[0][0], &ux = d[0][1], &uxx = d[0][2], &uxxx = d[0][3];
  return 1.0 - 2.0 * u + ux + 2.0 * uxx - uxxx;
}

template <typename T>
T f22_expr(const T (&d)[2][5]) {
  const T &u = d[0][0], &ux = d[0][1], &uxx = d[0][2], &uxxx = d[0][3];
  return 16.0 * ux * ux - 16.0 * u * ux + 16.0 * u * uxx - 16.0 * ux * uxx -
         4.0 * u * uxxx + 2.0 * uxx * uxx + 2.0 * ux * uxxx;
}

// D_x / D_t of a jet-coordinate expression via one dual pass per entry.
template <typename F>
void total_derivatives(F&& f, const Jet& j, double* dx, double* dt) {
  Dual d[2][5];
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 4; ++b) d[a][b] = Dual(j.d[a][b]);
  *dx = 0.0;
  *dt = 0.0;
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 4; ++b) {
      d[a][b].d = 1.0;
      const double partial = f(d).d;
      d[a][b].d = 0.0;
      if (partial == 0.0) continue;
      if (b < 4) *dx += partial * j.d[a][b + 1];
      else throw InvalidParamsError("expression consumes a jet entry beyond the cap");
      if (a == 0) *dt += partial * j.d[1][b];
      else throw InvalidParamsError("expression depends on a t-derivative entry");
    }
  }
}

}  // namespace

OneFormTriad triad(const Jet& j) {
  OneFormTriad w;
  double d[2][5];
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 4; ++b) d[a][b] = j.d[a][b];
  w.f21 = f21_expr(d);
  w.f22 = f22_expr(d);
  w.f31 = w.f21;
  w.f32 = w.f22;
  return w;
}

std::array<double, 3> structure_residuals(const AnalyticField& field, double x,
                                          double t) {
  const Jet j = field.jet_at(x, t);
  const OneFormTriad w = triad(j);

  // f21 depends on t-derivative entries only through none; its D_t needs
  // mixed entries u_{1,b} which the dual pass supplies via the a = 0 row.
  double dxP, dtP, dxQ, dtQ;
  total_derivatives([](const Dual (&d)[2][5]) { return f21_expr(d); }, j, &dxP, &dtP);
  total_derivatives([](const Dual (&d)[2][5]) { return f22_expr(d); }, j, &dxQ, &dtQ);
  (void)dxP;
  (void)dtQ;

  // dw_i = (D_x f_{i2} - D_t f_{i1}) dx^dt; wedge coefficients with the
  // same orientation: w_a ^ w_b = (f_{a1} f_{b2} - f_{a2} f_{b1}) dx^dt.
  const double r1 = 0.0 - (w.f31 * w.f22 - w.f32 * w.f21);  // dw1 - w3^w2
  const double r2 = (dxQ - dtP) - (w.f11 * w.f32 - w.f12 * w.f31);
  const double r3 = (dxQ - dtP) - (w.f11 * w.f22 - w.f12 * w.f21);
  return {r1, r2, r3};
}

double genericity(const Jet& j) {
  // 2 d_x (2 - d_x) w^2 with w = u_x - 2u:
  //   8 w w' - 4 (w')^2 - 4 w w''
  const double w = j.ux() - 2.0 * j.u();
  const double w1 = j.uxx() - 2.0 * j.ux();
  const double w2 = j.uxxx() - 2.0 * j.uxx();
  return 8.0 * w * w1 - 4.0 * w1 * w1 - 4.0 * w * w2;
}

MetricCoefficients metric(const Jet& j) {
  const OneFormTriad w = triad(j);
  MetricCoefficients m;
  m.E = 4.0 + w.f21 * w.f21;
  m.F = w.f21 * w.f22;
  m.G = w.f22 * w.f22;
  return m;
}

double curvature(const AnalyticField& field, double x, double t, double h) {
  if (!(h > 0.0)) throw InvalidParamsError("stencil spacing must be positive");
  double E[5][5], F[5][5], G[5][5];
  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k < 5; ++k) {
      const Jet j = field.jet_at(x + (i - 2) * h, t + (k - 2) * h);
      const MetricCoefficients m = metric(j);
      if (m.E * m.G - m.F * m.F <= 1e-12)
        throw DegenerateMetricError("metric is degenerate on the stencil");
      E[i][k] = m.E;
      F[i][k] = m.F;
      G[i][k] = m.G;
    }
  }

  const double c1[5] = {1.0, -8.0, 0.0, 8.0, -1.0};       // /(12h)
  const double c2[5] = {-1.0, 16.0, -30.0, 16.0, -1.0};   // /(12h^2)
  const double s1 = 1.0 / (12.0 * h), s2 = 1.0 / (12.0 * h * h);

  auto dx = [&](double (&f)[5][5]) {
    double acc = 0.0;
    for (int i = 0; i < 5; ++i) acc += c1[i] * f[i][2];
    return acc * s1;
  };
  auto dt = [&](double (&f)[5][5]) {
    double acc = 0.0;
    for (int k = 0; k < 5; ++k) acc += c1[k] * f[2][k];
    return acc * s1;
  };
  auto dxx = [&](double (&f)[5][5]) {
    double acc = 0.0;
    for (int i = 0; i < 5; ++i) acc += c2[i] * f[i][2];
    return acc * s2;
  };
  auto dtt = [&](double (&f)[5][5]) {
    double acc = 0.0;
    for (int k = 0; k < 5; ++k) acc += c2[k] * f[2][k];
    return acc * s2;
  };
  auto dxt = [&](double (&f)[5][5]) {
    double acc = 0.0;
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < 5; ++k) acc += c1[i] * c1[k] * f[i][k];
    return acc * s1 * s1;
  };

  const double e = E[2][2], f = F[2][2], g = G[2][2];
  const double ex = dx(E), et = dt(E), ett = dtt(E);
  const double fx = dx(F), ft = dt(F), fxt = dxt(F);
  const double gx = dx(G), gt = dt(G), gxx = dxx(G);

  auto det3 = [](double a11, double a12, double a13, double a21, double a22,
                 double a23, double a31, double a32, double a33) {
    return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
           a13 * (a21 * a32 - a22 * a31);
  };

  const double m1 = det3(-0.5 * ett + fxt - 0.5 * gxx, 0.5 * ex, fx - 0.5 * et,
                         ft - 0.5 * gx, e, f,
                         0.5 * gt, f, g);
  const double m2 = det3(0.0, 0.5 * et, 0.5 * gx,
                         0.5 * et, e, f,
                         0.5 * gx, f, g);
  const double denom = e * g - f * f;
  return (m1 - m2) / (denom * denom);
}

}  // namespace pklab
