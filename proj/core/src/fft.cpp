#include "peakonlab/fft.hpp"

#include <cmath>
#include <mutex>

#include <fftw3.h>

namespace pklab {

namespace {

// FFTW's planner is not thread-safe; execution of ready plans is.
std::mutex g_planner_mutex;

}  // namespace

std::vector<std::complex<double>> fft_forward(const GridState& g) {
  if (!g.periodic) throw InvalidParamsError("transform requires a periodic grid");
  const std::size_t n = g.size();
  std::vector<double> in(g.samples);
  std::vector<std::complex<double>> out(n / 2 + 1);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                reinterpret_cast<fftw_complex*>(out.data()),
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<double> fft_inverse(std::vector<std::complex<double>> spectrum,
                                std::size_t n) {
  if (spectrum.size() != n / 2 + 1)
    throw InvalidParamsError("spectrum length does not match grid size");
  std::vector<double> out(n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    plan = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                reinterpret_cast<fftw_complex*>(spectrum.data()),
                                out.data(), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    fftw_destroy_plan(plan);
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : out) v *= scale;
  return out;
}

double fft_wavenumber(std::size_t k, std::size_t n, double h) {
  return 2.0 * M_PI * static_cast<double>(k) / (h * static_cast<double>(n));
}

GridState spectral_derivative(const GridState& g, int order) {
  if (order < 0) throw InvalidParamsError("derivative order must be >= 0");
  const std::size_t n = g.size();
  auto spectrum = fft_forward(g);
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const std::complex<double> ik(0.0, fft_wavenumber(k, n, g.h));
    std::complex<double> mult(1.0, 0.0);
    for (int p = 0; p < order; ++p) mult *= ik;
    spectrum[k] *= mult;
  }
  // unmatched Nyquist mode carries no usable phase for odd derivatives
  if (order % 2 == 1 && n % 2 == 0) spectrum.back() = 0.0;
  GridState out = g;
  out.samples = fft_inverse(std::move(spectrum), n);
  return out;
}

GridState central4_derivative(const GridState& g) {
  const std::size_t n = g.size();
  if (n < 5) throw InvalidParamsError("stencil needs at least 5 samples");
  GridState out = g;
  const auto& f = g.samples;
  const double inv12h = 1.0 / (12.0 * g.h);
  auto central = [&](std::size_t i, std::size_t im2, std::size_t im1,
                     std::size_t ip1, std::size_t ip2) {
    out.samples[i] = (f[im2] - 8.0 * f[im1] + 8.0 * f[ip1] - f[ip2]) * inv12h;
  };
  if (g.periodic) {
    for (std::size_t i = 0; i < n; ++i)
      central(i, (i + n - 2) % n, (i + n - 1) % n, (i + 1) % n, (i + 2) % n);
  } else {
    const double invh = 1.0 / g.h;
    out.samples[0] = (-25.0 / 12.0 * f[0] + 4.0 * f[1] - 3.0 * f[2] +
                      4.0 / 3.0 * f[3] - 0.25 * f[4]) * invh;
    out.samples[1] = (-0.25 * f[0] - 5.0 / 6.0 * f[1] + 1.5 * f[2] -
                      0.5 * f[3] + 1.0 / 12.0 * f[4]) * invh;
    for (std::size_t i = 2; i + 2 < n; ++i) central(i, i - 2, i - 1, i + 1, i + 2);
    out.samples[n - 2] = (0.25 * f[n - 1] + 5.0 / 6.0 * f[n - 2] - 1.5 * f[n - 3] +
                          0.5 * f[n - 4] - 1.0 / 12.0 * f[n - 5]) * invh;
    out.samples[n - 1] = (25.0 / 12.0 * f[n - 1] - 4.0 * f[n - 2] + 3.0 * f[n - 3] -
                          4.0 / 3.0 * f[n - 4] + 0.25 * f[n - 5]) * invh;
  }
  return out;
}

}  // namespace pklab
