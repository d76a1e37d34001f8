#include <doctest.h>

#include <cmath>

#include "peakonlab/fourier_field.hpp"
#include "peakonlab/geometry.hpp"
#include "peakonlab/pde.hpp"
#include "peakonlab/solutions.hpp"

using namespace pklab;

namespace {

SolutionSpec spec_of(Family f, std::map<std::string, double> params) {
  SolutionSpec s;
  s.family = f;
  s.params = std::move(params);
  return s;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("first structure equation vanishes identically") {
    const FourierField f = FourierField::random(41);
    for (double x : {-2.0, 0.1, 1.7}) {
      const auto r = structure_residuals(f, x, 0.3);
      CHECK(r[0] == 0.0);
      CHECK(r[1] == doctest::Approx(r[2]).epsilon(1e-12));
    }
  }

  TEST_CASE("remaining structure residuals equal (2 - d_x) of the residual") {
    const FourierField f = FourierField::random(42);
    const double x = 0.7, t = -0.2, h = 1e-6;
    const auto r = structure_residuals(f, x, t);
    const double ex = residual_local(f.jet_at(x, t));
    const double dex = (residual_local(f.jet_at(x + h, t)) -
                        residual_local(f.jet_at(x - h, t))) /
                       (2.0 * h);
    CHECK(r[1] == doctest::Approx(2.0 * ex - dex).epsilon(1e-6));
  }

  TEST_CASE("structure residuals vanish on solutions") {
    FieldPtr f = instantiate(spec_of(Family::TravelingMinus,
                                     {{"alpha1", 1.0}, {"c", 2.0}}));
    for (double x : {-1.0, 0.5, 2.0}) {
      const auto r = structure_residuals(*f, x, 0.4);
      CHECK(std::abs(r[1]) < 1e-10);
      CHECK(std::abs(r[2]) < 1e-10);
    }
  }

  TEST_CASE("genericity: nonzero on one traveling family, zero on the other") {
    // w = (u_x - 2u)^2 satisfies w' = 2w for the plus family, killing
    // 2 d_x (2 - d_x) w identically
    FieldPtr plus = instantiate(spec_of(Family::TravelingPlus,
                                        {{"c", 1.5}, {"alpha2", -0.5}}));
    for (double x : {-1.0, 0.0, 1.3})
      CHECK(std::abs(genericity(plus->jet_at(x, 0.2))) < 1e-10);
    // the minus family with alpha1 = 1/sqrt(72) has genericity -2 at z = 0
    FieldPtr minus = instantiate(spec_of(
        Family::TravelingMinus, {{"alpha1", 1.0 / std::sqrt(72.0)}, {"c", 2.0}}));
    CHECK(genericity(minus->jet_at(0.4, 0.2)) == doctest::Approx(-2.0));
  }

  TEST_CASE("metric coefficients follow the triad") {
    const FourierField f = FourierField::random(43);
    const Jet j = f.jet_at(0.3, 0.1);
    const OneFormTriad tr = triad(j);
    const MetricCoefficients m = metric(j);
    CHECK(m.E == doctest::Approx(4.0 + tr.f21 * tr.f21));
    CHECK(m.F == doctest::Approx(tr.f21 * tr.f22));
    CHECK(m.G == doctest::Approx(tr.f22 * tr.f22));
  }

  TEST_CASE("curvature is -1 on the exponential solution surfaces") {
    FieldPtr a = instantiate(spec_of(Family::TravelingMinus,
                                     {{"alpha1", 1.0}, {"c", 2.0}}));
    FieldPtr b = instantiate(spec_of(Family::InvariantExpSimple, {{"a", 1.0}}));
    for (double x : {-0.5, 0.0, 0.8}) {
      CHECK(curvature(*a, x, 0.3) == doctest::Approx(-1.0).epsilon(1e-6));
      CHECK(curvature(*b, x, 0.5) == doctest::Approx(-1.0).epsilon(1e-6));
    }
  }

  TEST_CASE("degenerate metrics are refused") {
    FieldPtr flat = instantiate(spec_of(Family::Constant, {{"c", 1.0}}));
    // u_x = 0 everywhere forces f22 = 0, so E G - F^2 = 0
    CHECK_FALSE(metric(flat->jet_at(0.0, 0.0)).admissible());
    CHECK_THROWS_AS((void)curvature(*flat, 0.0, 0.0), DegenerateMetricError);
  }
}
