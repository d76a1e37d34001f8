#include "peakonlab/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "peakonlab/fft.hpp"

namespace pklab {

Spectrum spectrum(const GridState& g) {
  g.validate();
  if (!g.periodic)
    throw InvalidParamsError("spectrum needs a periodic grid");
  const std::size_t n = g.size();
  const auto bins = fft_forward(g);  // n/2 + 1 half-spectrum bins
  const double period = g.length();
  const double scale = g.h / std::sqrt(2.0 * std::numbers::pi);

  Spectrum sp;
  sp.dk = 2.0 * std::numbers::pi / period;
  const long half = static_cast<long>(n) / 2;
  for (long j = -half; j < static_cast<long>(n) - half; ++j) {
    const double k = sp.dk * static_cast<double>(j);
    std::complex<double> c =
        (j >= 0) ? bins[static_cast<std::size_t>(j)]
                 : std::conj(bins[static_cast<std::size_t>(-j)]);
    c *= scale * std::exp(std::complex<double>(0.0, -k * g.x0));
    sp.wavenumbers.push_back(k);
    sp.coefficients.push_back(c);
  }

  // aliasing check: data should be small at the ends of the window
  double peak = 0.0;
  for (double v : g.samples) peak = std::max(peak, std::abs(v));
  const double edge =
      std::max(std::abs(g.samples.front()), std::abs(g.samples.back()));
  sp.decay_warning = peak > 0.0 && edge > 1e-10 * peak;
  return sp;
}

std::complex<double> theta_hat_analytic(double k, double c) {
  const std::complex<double> denom =
      std::sqrt(2.0 * std::numbers::pi) * (1.0 + k * k) *
      std::complex<double>(2.0, -k);
  return -c / denom;
}

double hs_norm(const Spectrum& sp, double s) {
  if (sp.coefficients.size() != sp.wavenumbers.size())
    throw InvalidParamsError("spectrum bins and wavenumbers disagree");
  double acc = 0.0;
  for (std::size_t i = 0; i < sp.coefficients.size(); ++i) {
    const double k = sp.wavenumbers[i];
    acc += std::pow(1.0 + k * k, s) * std::norm(sp.coefficients[i]) * sp.dk;
  }
  return std::sqrt(acc);
}

namespace {

constexpr double kNode10[10] = {
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244,
    -0.4333953941292472, -0.1488743389816312, 0.1488743389816312,
    0.4333953941292472,  0.6794095682990244,  0.8650633666889845,
    0.9739065285171717};
constexpr double kWeight10[10] = {
    0.0666713443086881, 0.1494513491505806, 0.2190863625159820,
    0.2692667193099963, 0.2955242247147529, 0.2955242247147529,
    0.2692667193099963, 0.2190863625159820, 0.1494513491505806,
    0.0666713443086881};

}  // namespace

double h1_norm_window(const AnalyticField& field, double t, double a,
                      double b) {
  if (!(b > a)) throw InvalidParamsError("window needs a < b");
  std::vector<double> pts{a, b};
  for (double q : field.crest_positions(t))
    if (q > a && q < b) pts.push_back(q);
  std::sort(pts.begin(), pts.end());

  double prev = 0.0;
  for (int level = 0; level < 12; ++level) {
    const int panels = 1 << level;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double step = (pts[i + 1] - pts[i]) / panels;
      for (int p = 0; p < panels; ++p) {
        const double lo = pts[i] + p * step;
        for (int gnode = 0; gnode < 10; ++gnode) {
          const double x = lo + 0.5 * step * (1.0 + kNode10[gnode]);
          const Jet j = field.jet_one_sided(x, t, Side::Right);
          acc += 0.5 * step * kWeight10[gnode] *
                 (j.u() * j.u() + j.ux() * j.ux());
        }
      }
    }
    if (level > 1 && std::abs(acc - prev) <= 1e-13 * (1.0 + std::abs(acc)))
      return std::sqrt(acc);
    prev = acc;
  }
  return std::sqrt(prev);
}

}  // namespace pklab
