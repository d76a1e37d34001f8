#include <doctest.h>

#include <cmath>

#include "peakonlab/fft.hpp"

using namespace pklab;

namespace {

GridState sine_grid(std::size_t n, int mode) {
  GridState g = make_grid(M_PI, n, true);
  for (std::size_t i = 0; i < n; ++i)
    g.samples[i] = std::sin(static_cast<double>(mode) * g.x(i));
  return g;
}

double max_err(const GridState& got, int mode, std::size_t n, int order) {
  // d/dx sin(mx) = m cos(mx); second derivative flips back to sine
  double worst = 0.0;
  const double m = static_cast<double>(mode);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = got.x(i);
    const double exact = order == 1 ? m * std::cos(m * x)
                                    : -m * m * std::sin(m * x);
    worst = std::max(worst, std::abs(got.samples[i] - exact));
  }
  return worst;
}

}  // namespace

TEST_SUITE("fft") {
  TEST_CASE("forward/inverse round trip") {
    const GridState g = sine_grid(64, 3);
    const auto spec = fft_forward(g);
    REQUIRE(spec.size() == 33);
    const auto back = fft_inverse(spec, 64);
    for (std::size_t i = 0; i < 64; ++i)
      CHECK(back[i] == doctest::Approx(g.samples[i]).epsilon(1e-13));
  }

  TEST_CASE("wavenumbers scale with the box") {
    CHECK(fft_wavenumber(0, 64, 0.1) == 0.0);
    CHECK(fft_wavenumber(1, 64, 0.1) == doctest::Approx(2.0 * M_PI / 6.4));
    CHECK(fft_wavenumber(5, 100, 0.2) == doctest::Approx(5.0 * 2.0 * M_PI / 20.0));
  }

  TEST_CASE("spectral derivative is exact on resolved sines") {
    const std::size_t n = 64;
    const GridState g = sine_grid(n, 3);
    CHECK(max_err(spectral_derivative(g, 1), 3, n, 1) < 1e-12);
    CHECK(max_err(spectral_derivative(g, 2), 3, n, 2) < 1e-11);
  }

  TEST_CASE("central difference converges at 4th order") {
    const double e1 = max_err(central4_derivative(sine_grid(64, 3)), 3, 64, 1);
    const double e2 = max_err(central4_derivative(sine_grid(128, 3)), 3, 128, 1);
    CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.15));
  }

  TEST_CASE("open-grid boundary stencils stay 4th order") {
    auto poly = [](std::size_t n) {
      GridState g = make_grid(1.0, n, false);
      for (std::size_t i = 0; i < n; ++i) {
        const double x = g.x(i);
        g.samples[i] = std::exp(0.5 * x);
      }
      return g;
    };
    auto err = [&](std::size_t n) {
      const GridState d = central4_derivative(poly(n));
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst,
                         std::abs(d.samples[i] - 0.5 * std::exp(0.5 * d.x(i))));
      return worst;
    };
    CHECK(err(65) / err(129) == doctest::Approx(16.0).epsilon(0.25));
  }
}
