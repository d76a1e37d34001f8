#include <doctest.h>

#include <cmath>

#include "peakonlab/conslaws.hpp"
#include "peakonlab/peakon_ode.hpp"

using namespace pklab;

TEST_SUITE("peakon_ode") {
  TEST_CASE("continuity constraint and validation") {
    const SinglePeakonState s = SinglePeakonState::make(-0.5, 1.0 / 3.0, 0.0);
    CHECK(s.p1 == doctest::Approx(s.p2 + s.p3));
    SinglePeakonState bad = s;
    bad.p1 += 0.1;
    CHECK_THROWS_AS(bad.validate(), InvalidParamsError);
  }

  TEST_CASE("closed-form trajectory satisfies the amplitude system") {
    // d/dt of the closed form must match single_rhs along the trajectory
    const double c = 1.0, t0 = -2.0, q0 = 0.3, dt = 1e-6;
    for (double t : {0.0, 0.5, 1.2}) {
      const SinglePeakonState s = single_closed_form(t, c, t0, q0);
      const SinglePeakonState sp = single_closed_form(t + dt, c, t0, q0);
      const SinglePeakonState sm = single_closed_form(t - dt, c, t0, q0);
      const SingleDerivs d = single_rhs(s);
      CHECK(d.dp2 == doctest::Approx((sp.p2 - sm.p2) / (2.0 * dt)).epsilon(1e-7));
      CHECK(d.dp3 == doctest::Approx((sp.p3 - sm.p3) / (2.0 * dt)).epsilon(1e-7));
      CHECK(d.dq == doctest::Approx(c).epsilon(1e-9));
    }
  }

  TEST_CASE("steady profile is a fixed point moving at speed c") {
    const double c = 2.0;
    const SingleDerivs d = single_rhs(SinglePeakonState::make(-c / 2.0, c / 3.0, 0.7));
    CHECK(std::abs(d.dp2) < 1e-12);
    CHECK(std::abs(d.dp3) < 1e-12);
    CHECK(d.dq == doctest::Approx(c));
  }

  TEST_CASE("integration tracks the closed form before the pole") {
    // t0 = 1 puts the amplitude pole at t = 1; integrate to 0.9
    const double c = 1.0, t0 = 1.0;
    SingleOdeConfig cfg;
    cfg.t_end = 0.9;
    const SingleTrajectory tr = integrate_single(single_closed_form(0.0, c, t0, 0.0), cfg);
    REQUIRE(tr.status == OdeStatus::Completed);
    const SinglePeakonState& last = tr.states.back();
    const SinglePeakonState exact = single_closed_form(tr.times.back(), c, t0, 0.0);
    CHECK(last.p2 == doctest::Approx(exact.p2).epsilon(1e-8));
    CHECK(last.p3 == doctest::Approx(exact.p3).epsilon(1e-8));
    CHECK(last.q == doctest::Approx(exact.q).epsilon(1e-8));
  }

  TEST_CASE("blow-up is detected before the pole") {
    SingleOdeConfig cfg;
    cfg.t_end = 2.0;
    const SingleTrajectory tr = integrate_single(single_closed_form(0.0, 1.0, 1.0, 0.0), cfg);
    REQUIRE(tr.status == OdeStatus::BlowUp);
    CHECK(tr.t_detect < 1.0);
    CHECK(tr.t_detect > 0.99);
  }

  TEST_CASE("snapshot invariants: steady branch conserves, decaying branch drifts") {
    // the fixed-point profile just translates, so its integrals are constant
    std::vector<std::pair<double, double>> steady, q0s, e2s;
    for (double t : {0.0, 0.4, 0.8}) {
      FieldPtr f = assemble_field(SinglePeakonState::make(-1.0, 2.0 / 3.0, 2.0 * t));
      steady.emplace_back(t, quantity(QuantityIndex::E2, *f, t, 40.0, 8192).value);
      // the 1/(t-t0) branch keeps its mean but not its L2 mass:
      //   Q0 = -c/2,  E2 = c^2/18 + 1/(36 (t-t0)^2)
      FieldPtr g = assemble_field(single_closed_form(t, 2.0, -3.0, 0.0));
      q0s.emplace_back(t, quantity(QuantityIndex::Q0, *g, t, 40.0, 8192).value);
      const double e2 = quantity(QuantityIndex::E2, *g, t, 40.0, 8192).value;
      e2s.emplace_back(t, e2);
      const double s = t + 3.0;
      CHECK(e2 == doctest::Approx(4.0 / 18.0 + 1.0 / (36.0 * s * s)).epsilon(1e-8));
    }
    CHECK(drift(steady) < 1e-8);
    CHECK(drift(q0s) < 1e-8);
    CHECK(drift(e2s) > 1e-3);
  }

  TEST_CASE("two-crest closed form satisfies all six equations") {
    const double c1 = 1.0, c2 = 1.0, k1 = 0.0;
    for (double t : {0.1, 0.5, 1.0}) {
      const TwoPeakonState s = two_closed_form(t, c1, c2, k1);
      // analytic derivatives of the closed form
      const double es = std::exp(k1 + 2.0 * c1 * t + 2.0 * c2);
      TwoDerivs d;
      d.dp2 = -2.0 * c1 * c1 * es / ((es - 1.0) * (es - 1.0));
      d.dp1 = -d.dp2;
      d.dq1 = c1;
      d.dq2 = -c1;
      for (double r : two_residual(s, d)) CHECK(std::abs(r) < 1e-12);
      // wrong derivatives leave a visible residual
      d.dq1 = c1 + 0.1;
      double worst = 0.0;
      for (double r : two_residual(s, d)) worst = std::max(worst, std::abs(r));
      CHECK(worst > 1e-3);
    }
  }

  TEST_CASE("assembled snapshots expose their crests") {
    const TwoPeakonState s = two_closed_form(0.5, 1.0, 1.0, 0.0);
    FieldPtr f = assemble_field(s);
    const auto crests = f->crest_positions(0.5);
    REQUIRE(crests.size() == 2);
    CHECK(crests[0] == doctest::Approx(std::min(s.q1, s.q2)));
    CHECK(crests[1] == doctest::Approx(std::max(s.q1, s.q2)));
  }
}
