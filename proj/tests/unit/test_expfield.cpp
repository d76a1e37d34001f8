#include <doctest.h>

#include <cmath>

#include "peakonlab/expfield.hpp"
#include "peakonlab/peakon_ode.hpp"
#include "peakonlab/solutions.hpp"

using namespace pklab;

namespace {

// dense trapezoid reference for the Helmholtz-kernel convolution
double conv_reference(const AnalyticField& f, double x) {
  const double L = 45.0;
  const std::size_t n = 600001;
  const double h = 2.0 * L / static_cast<double>(n - 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = -L + h * static_cast<double>(i);
    double w = 0.5 * std::exp(-std::abs(x - y)) * f.value(y, 0.0);
    if (i == 0 || i + 1 == n) w *= 0.5;
    acc += w;
  }
  return acc * h;
}

}  // namespace

TEST_SUITE("expfield") {
  TEST_CASE("regions reproduce values and derivatives off the crest") {
    auto field = std::dynamic_pointer_cast<const PiecewiseExpField>(
        instantiate(collage(6.0)));
    REQUIRE(field);
    const auto r0 = field->regions(0.0, 0);
    const auto r1 = field->regions(0.0, 1);
    REQUIRE(r0.size() == 2);
    for (double x : {-2.0, -0.4, 0.7, 3.0}) {
      const std::size_t which = x < 0.0 ? 0 : 1;
      double v = 0.0, dv = 0.0;
      for (const auto& term : r0[which].terms) v += term.coef * std::exp(term.rate * x);
      for (const auto& term : r1[which].terms) dv += term.coef * std::exp(term.rate * x);
      const Jet j = field->jet_at(x, 0.0);
      CHECK(v == doctest::Approx(j.u()).epsilon(1e-14));
      CHECK(dv == doctest::Approx(j.ux()).epsilon(1e-14));
    }
  }

  TEST_CASE("closed-form Helmholtz convolution matches dense quadrature") {
    auto field = std::dynamic_pointer_cast<const PiecewiseExpField>(
        instantiate(collage(6.0)));
    REQUIRE(field);
    const auto r0 = field->regions(0.0, 0);
    for (double x : {-1.5, 0.0, 0.9, 4.0})
      CHECK(conv_helmholtz_exact(r0, x) ==
            doctest::Approx(conv_reference(*field, x)).epsilon(1e-7));
  }

  TEST_CASE("exact integration of the glued profile") {
    auto field = std::dynamic_pointer_cast<const PiecewiseExpField>(
        instantiate(collage(6.0)));
    REQUIRE(field);
    const auto r0 = field->regions(0.0, 0);
    // integral of the full profile is -c/2
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(integrate_regions(r0, -inf, inf) == doctest::Approx(-3.0).epsilon(1e-14));
    // left half: p2 + p3/2 = -3 + 1
    CHECK(integrate_regions(r0, -inf, 0.0) == doctest::Approx(-2.0).epsilon(1e-12));
  }

  TEST_CASE("region algebra: products and sums evaluate pointwise") {
    auto field = std::dynamic_pointer_cast<const PiecewiseExpField>(
        instantiate(collage(2.0)));
    REQUIRE(field);
    const auto r0 = field->regions(0.0, 0);
    const auto r1 = field->regions(0.0, 1);
    const auto sq = multiply_regions(r0, r0);
    const auto mix = add_regions(scale_regions(sq, 3.0), multiply_regions(r1, r1));
    for (double x : {-1.0, 0.5}) {
      const Jet j = field->jet_at(x, 0.0);
      double v = 0.0;
      const std::size_t which = x < 0.0 ? 0 : 1;
      for (const auto& term : mix[which].terms) v += term.coef * std::exp(term.rate * x);
      CHECK(v == doctest::Approx(3.0 * j.u() * j.u() + j.ux() * j.ux()).epsilon(1e-13));
    }
  }
}
