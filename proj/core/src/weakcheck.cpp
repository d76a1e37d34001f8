#include "peakonlab/weakcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace pklab {

namespace {

// inner helper: xi and derivatives of the exponent g(xi) = -1/(1-xi^2)
struct BumpEval {
  double phi = 0.0, g1 = 0.0, g2 = 0.0;  // g1, g2: d/dxi of the exponent
  bool inside = false;
};

BumpEval bump_eval(double xi) {
  BumpEval e;
  const double s = 1.0 - xi * xi;
  if (s <= 0.0) return e;
  e.inside = true;
  e.phi = std::exp(-1.0 / s);
  const double inv = 1.0 / s;
  e.g1 = -2.0 * xi * inv * inv;
  e.g2 = -2.0 * inv * inv - 8.0 * xi * xi * inv * inv * inv;
  return e;
}

}  // namespace

double Bump::value(double x) const {
  if (!(width > 0.0)) throw InvalidParamsError("bump width must be positive");
  return bump_eval((x - center) / width).phi;
}

double Bump::d1(double x) const {
  if (!(width > 0.0)) throw InvalidParamsError("bump width must be positive");
  const BumpEval e = bump_eval((x - center) / width);
  return e.phi * e.g1 / width;
}

double Bump::d2(double x) const {
  if (!(width > 0.0)) throw InvalidParamsError("bump width must be positive");
  const BumpEval e = bump_eval((x - center) / width);
  return e.phi * (e.g1 * e.g1 + e.g2) / (width * width);
}

namespace {

constexpr double kNode[10] = {
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244,
    -0.4333953941292472, -0.1488743389816312, 0.1488743389816312,
    0.4333953941292472,  0.6794095682990244,  0.8650633666889845,
    0.9739065285171717};
constexpr double kWeight[10] = {
    0.0666713443086881, 0.1494513491505806, 0.2190863625159820,
    0.2692667193099963, 0.2955242247147529, 0.2955242247147529,
    0.2692667193099963, 0.2190863625159820, 0.1494513491505806,
    0.0666713443086881};

double gauss10(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 10; ++i) acc += kWeight[i] * f(mid + half * kNode[i]);
  return acc * half;
}

// Composite Gauss panels between the given breakpoints, panel count
// doubled until two consecutive estimates agree within tol.
double adaptive_quadrature(const std::function<double(double)>& f,
                           std::vector<double> pts, double tol) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2) return 0.0;

  double prev = 0.0;
  for (int level = 0; level < 12; ++level) {
    const int panels = 1 << level;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double a = pts[i], b = pts[i + 1];
      const double step = (b - a) / panels;
      for (int p = 0; p < panels; ++p)
        acc += gauss10(f, a + p * step, a + (p + 1) * step);
    }
    if (level > 2 && std::abs(acc - prev) <= tol) return acc;
    prev = acc;
  }
  throw QuadratureError("panel refinement did not reach the requested tolerance");
}

}  // namespace

double weak_residual_ode(const FieldPtr& theta, double c, const Bump& phi,
                         double tol) {
  if (!theta) throw InvalidParamsError("null profile");
  const double lo = phi.center - phi.width, hi = phi.center + phi.width;

  std::vector<double> pts{lo, hi};
  for (double q : theta->crest_positions(0.0))
    if (q > lo && q < hi) pts.push_back(q);

  auto integrand = [&](double z) {
    const Jet j = theta->jet_one_sided(z, 0.0, Side::Right);
    const double th = j.u(), th1 = j.ux();
    return -(c * th + 8.0 * th * th + 2.0 * th1 * th1) * phi.value(z) +
           th1 * th1 * phi.d1(z) + (c * th + 2.0 * th * th) * phi.d2(z);
  };
  return adaptive_quadrature(integrand, std::move(pts), tol);
}

double helmholtz_pointwise(const std::vector<ExpRegion>& f, double x) {
  if (f.size() == 1 && std::isinf(f[0].lo) && std::isinf(f[0].hi)) {
    // entire-line smooth input: eigenvalue form, valid for any growth
    // rate except the kernel's own
    double acc = 0.0;
    for (const AbsExpTerm& term : f[0].terms) {
      const double denom = 1.0 - term.rate * term.rate;
      if (std::abs(denom) < 1e-12)
        throw DegenerateError("input resonates with the kernel rate");
      acc += term.coef / denom * std::exp(term.rate * x);
    }
    return acc;
  }
  return conv_helmholtz_exact(f, x);
}

double weak_residual_pde(const FieldPtr& field, const SpaceTimeBump& phi,
                         double T, double tol) {
  auto pw = std::dynamic_pointer_cast<const PiecewiseExpField>(field);
  if (!pw)
    throw InvalidParamsError("space-time weak form needs a piecewise-exponential field");
  const double xlo = phi.space.center - phi.space.width;
  const double xhi = phi.space.center + phi.space.width;

  auto space_integral = [&](double t, double inner_tol) {
    const auto u0 = pw->regions(t, 0);
    const auto u1 = pw->regions(t, 1);
    const auto uxsq = multiply_regions(u1, u1);
    const auto quad = add_regions(scale_regions(multiply_regions(u0, u0), 6.0),
                                  scale_regions(uxsq, 2.0));
    std::vector<double> pts{xlo, xhi};
    for (double q : pw->crest_positions(t))
      if (q > xlo && q < xhi) pts.push_back(q);
    auto integrand = [&](double x) {
      const Jet j = pw->jet_one_sided(x, t, Side::Right);
      const double u = j.u(), ux = j.ux();
      return helmholtz_pointwise(uxsq, x) * phi.value(x, t) +
             u * phi.dt(x, t) - 2.0 * u * u * phi.dx(x, t) -
             ux * ux * phi.value(x, t) -
             helmholtz_pointwise(quad, x) * phi.dx(x, t);
    };
    return adaptive_quadrature(integrand, std::move(pts), inner_tol);
  };

  double acc = 0.0;
  // initial-data term
  if (phi.time.value(0.0) != 0.0) {
    std::vector<double> pts{xlo, xhi};
    for (double q : pw->crest_positions(0.0))
      if (q > xlo && q < xhi) pts.push_back(q);
    acc += adaptive_quadrature(
        [&](double x) {
          return pw->value(x, 0.0) * phi.space.value(x) * phi.time.value(0.0);
        },
        std::move(pts), tol * 0.1);
  }

  const double tlo = std::max(0.0, phi.time.center - phi.time.width);
  const double thi = std::min(T, phi.time.center + phi.time.width);
  if (tlo < thi) {
    acc += adaptive_quadrature(
        [&](double t) { return space_integral(t, tol * 0.02); }, {tlo, thi},
        tol * 0.5);
  }
  return acc;
}

namespace {

// One-sided weak-form integral of the C^1 glued profile of speed c over
// the given interval; the sign pattern matches the excision functionals
// (opposite overall sign to weak_residual_ode's integrand).
double excised_integral(double eps_lo, double eps_hi, double c, const Bump& phi,
                        double tol, bool right_half) {
  auto theta = [&](double z, double* d1) {
    if (right_half) {
      const double e = std::exp(-z);
      *d1 = c / 6.0 * e;
      return -c / 6.0 * e;
    }
    const double e1 = std::exp(z), e2 = std::exp(2.0 * z);
    *d1 = 2.0 * c / 3.0 * e2 - c / 2.0 * e1;
    return c / 3.0 * e2 - c / 2.0 * e1;
  };
  auto integrand = [&](double z) {
    double th1;
    const double th = theta(z, &th1);
    return (c * th + 8.0 * th * th + 2.0 * th1 * th1) * phi.value(z) -
           th1 * th1 * phi.d1(z) - (c * th + 2.0 * th * th) * phi.d2(z);
  };
  if (eps_lo >= eps_hi) return 0.0;
  return adaptive_quadrature(integrand, {eps_lo, eps_hi}, tol);
}

}  // namespace

double boundary_term_plus(double eps, double c, const Bump& phi, double tol) {
  if (!(eps > 0.0)) throw InvalidParamsError("excision needs eps > 0");
  return excised_integral(eps, std::max(eps, phi.center + phi.width), c, phi,
                          tol, true);
}

double boundary_term_minus(double eps, double c, const Bump& phi, double tol) {
  if (!(eps > 0.0)) throw InvalidParamsError("excision needs eps > 0");
  return excised_integral(std::min(-eps, phi.center - phi.width), -eps, c, phi,
                          tol, false);
}

}  // namespace pklab
