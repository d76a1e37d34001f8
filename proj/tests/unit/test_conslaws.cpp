#include <doctest.h>

#include <cmath>
#include <random>

#include "peakonlab/conslaws.hpp"
#include "peakonlab/fourier_field.hpp"
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

// relative residual of the characteristic identity at one point
double rel_identity(int law, const AnalyticField& f, double x, double t) {
  const Jet j = f.jet_at(x, t);
  double d[2][5];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 5; ++b) d[a][b] = j.d[a][b];
  const double pairing = law_phi(law, x, d) * residual_local(j);
  return std::abs(identity_residual(law, f, x, t)) / (1.0 + std::abs(pairing));
}

}  // namespace

TEST_SUITE("conslaws") {
  TEST_CASE("characteristic identity holds off-shell on random fields") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), ut(-1.0, 1.0);
    for (int law = 1; law <= 5; ++law) {
      const FourierField f = FourierField::random(100 + static_cast<unsigned>(law));
      double worst = 0.0;
      for (int i = 0; i < 40; ++i)
        worst = std::max(worst, rel_identity(law, f, ux(rng), ut(rng)));
      CHECK(worst < 1e-8);
    }
  }

  TEST_CASE("identity also holds on an exact solution") {
    FieldPtr f = instantiate(spec_of(Family::TravelingMinus,
                                     {{"alpha1", 0.5}, {"c", 1.5}}));
    for (int law = 1; law <= 5; ++law)
      CHECK(rel_identity(law, *f, 0.4, 0.2) < 1e-9);
  }

  TEST_CASE("law index is range-checked") {
    const FourierField f = FourierField::random(1);
    CHECK_THROWS_AS((void)identity_residual(0, f, 0.0, 0.0), InvalidParamsError);
    CHECK_THROWS_AS((void)identity_residual(6, f, 0.0, 0.0), InvalidParamsError);
  }

  TEST_CASE("glued-profile invariants match closed forms") {
    FieldPtr f = instantiate(collage(6.0));
    // integral of u is -c/2; energy integral of (u^2 + u_x^2)/2 is c^2/18
    CHECK(quantity(QuantityIndex::Q0, *f, 0.0, 40.0, 16384).value ==
          doctest::Approx(-3.0).epsilon(1e-9));
    CHECK(quantity(QuantityIndex::E2, *f, 0.0, 40.0, 16384).value ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(quantity(QuantityIndex::H2, *f, 0.5, 40.0, 16384).value ==
          doctest::Approx(1.5).epsilon(1e-7));
    CHECK(quantity(QuantityIndex::H3, *f, 0.0, 40.0, 16384).value ==
          doctest::Approx(3.0).epsilon(1e-8));
    CHECK(quantity(QuantityIndex::H4, *f, 0.0, 40.0, 16384).value ==
          doctest::Approx(-18.0).epsilon(1e-8));
  }

  TEST_CASE("weighted invariant flags non-decaying weighted density") {
    FieldPtr f = instantiate(collage(6.0));
    const QuantityResult q1 = quantity(QuantityIndex::Q1, *f, 0.0, 40.0, 8192);
    CHECK(q1.decay_warning);  // e^{2x} weight defeats the e^{-x} tail
    const QuantityResult q0 = quantity(QuantityIndex::Q0, *f, 0.0, 40.0, 8192);
    CHECK_FALSE(q0.decay_warning);
  }

  TEST_CASE("grid-backed quadrature agrees with the field-backed one") {
    FieldPtr f = instantiate(collage(2.0));
    const GridState g = sample_field(*f, 0.0, 40.0, 16384, true);
    for (auto idx : {QuantityIndex::Q0, QuantityIndex::E2, QuantityIndex::H2}) {
      const double a = quantity(idx, g).value;
      const double b = quantity(idx, *f, 0.0, 40.0, 16384).value;
      CHECK(a == doctest::Approx(b).epsilon(1e-5));
    }
  }

  TEST_CASE("invariants are constant along the exact flow") {
    FieldPtr f = instantiate(collage(4.0));
    std::vector<std::pair<double, double>> series;
    for (double t : {0.0, 0.3, 0.6, 0.9})
      series.emplace_back(t, quantity(QuantityIndex::E2, *f, t, 40.0, 8192).value);
    CHECK(drift(series) < 1e-8);
  }

  TEST_CASE("drift is relative to the initial value") {
    CHECK(drift({{0.0, 2.0}, {1.0, 2.2}}) == doctest::Approx(0.1));
    CHECK(drift({{0.0, 0.0}, {1.0, 1e-20}}) > 1.0);  // tiny baseline, huge drift
  }
}
