#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

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

// max relative residual of the main equation over random sample points,
// one-sided so crest-carrying families can be probed too
double max_rel_residual(const AnalyticField& f, std::uint64_t seed,
                        int points = 200, double tmax = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-3.0, 3.0), ut(0.01, tmax);
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const Jet j = f.jet_one_sided(ux(rng), ut(rng), Side::Right);
    const double scale = 1.0 + std::abs(j.ut()) + std::abs(j.utxx()) +
                         std::abs(local_rhs(j));
    worst = std::max(worst, std::abs(residual_local(j)) / scale);
  }
  return worst;
}

// residual of the second catalog equation v_t - v_txx + 4 v v_x
//                                         = 3 v_x v_xx + v v_xxx
double dp_residual(const Jet& j) {
  return j.ut() - j.utxx() + 4.0 * j.u() * j.ux() - 3.0 * j.ux() * j.uxx() -
         j.u() * j.uxxx();
}

}  // namespace

TEST_SUITE("solutions") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(spec_of(Family::InvariantExp, {{"a", 1.0}, {"beta", 0.0}})),
                    InvalidParamsError);
    CHECK_THROWS_AS(validate(spec_of(Family::TravelingPlus, {{"c", 1.0}, {"alpha2", 2.0}})),
                    InvalidParamsError);
    CHECK_THROWS_AS(validate(spec_of(Family::PseudoPeakon, {{"c", 0.0}})),
                    InvalidParamsError);
    CHECK_THROWS_AS(validate(spec_of(Family::TwoPseudoPeakon, {{"c2", 1.0}, {"c1", 0.0}})),
                    InvalidParamsError);
    CHECK_THROWS_AS(validate(spec_of(Family::Constant, {})), InvalidParamsError);
    CHECK_NOTHROW(validate(spec_of(Family::Constant, {{"c", 2.5}})));
  }

  TEST_CASE("family names round-trip, aliases accepted") {
    for (Family f : {Family::Constant, Family::TravelingPlus, Family::DPShockPeakon})
      CHECK(family_from_name(family_name(f)) == f);
    CHECK(family_from_name("PseudoPeakon") == Family::PseudoPeakon);
    CHECK_THROWS_AS(family_from_name("unheard-of"), InvalidParamsError);
  }

  TEST_CASE("smooth families solve the main equation") {
    CHECK(max_rel_residual(*instantiate(spec_of(Family::Constant, {{"c", 1.7}})), 1) < 1e-12);
    CHECK(max_rel_residual(*instantiate(spec_of(Family::InvariantExp,
                                                {{"a", 0.8}, {"beta", -2.0}})), 2) < 1e-11);
    CHECK(max_rel_residual(*instantiate(spec_of(Family::InvariantExpSimple, {{"a", -1.3}})), 3) < 1e-12);
    CHECK(max_rel_residual(*instantiate(spec_of(Family::TravelingMinus,
                                                {{"alpha1", 0.6}, {"c", 2.0}})), 4) < 1e-12);
    CHECK(max_rel_residual(*instantiate(spec_of(Family::TravelingPlus,
                                                {{"c", 1.5}, {"alpha2", -0.5}})), 5) < 1e-12);
  }

  TEST_CASE("glued families solve the main equation off their crests") {
    CHECK(max_rel_residual(*instantiate(collage(6.0)), 6) < 1e-12);
    CHECK(max_rel_residual(*instantiate(spec_of(Family::NonConservativePeakon,
                                                {{"c", 1.0}, {"t0", -2.0}})), 7) < 1e-12);
    // crest ordering requires k1 + 2 c2 + 2 c1 t <= 0 on the probed times
    CHECK(max_rel_residual(*instantiate(spec_of(Family::TwoPseudoPeakon,
                                                {{"c1", 1.0}, {"c2", -2.0}})), 8) < 1e-11);
  }

  TEST_CASE("second-equation families solve their equation off-crest") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), ut(0.01, 1.0);
    for (auto spec : {spec_of(Family::DPPeakon, {{"c", 2.0}}),
                      spec_of(Family::DPTwoPeakon, {{"c1", 1.0}, {"c2", 1.0}}),
                      spec_of(Family::DPShockPeakon, {{"c", 1.0}, {"t0", -3.0}})}) {
      FieldPtr f = instantiate(spec);
      for (int i = 0; i < 100; ++i) {
        const Jet j = f->jet_one_sided(ux(rng), ut(rng), Side::Left);
        CHECK(std::abs(dp_residual(j)) < 1e-10 * (1.0 + std::abs(j.ut())));
      }
    }
  }

  TEST_CASE("blow-up families refuse their pole times") {
    FieldPtr f = instantiate(spec_of(Family::NonConservativePeakon, {{"c", 1.0}, {"t0", 2.0}}));
    CHECK_THROWS_AS((void)f->value(0.0, 2.0), BlowUpDomainError);
    CHECK_THROWS_AS((void)f->value(0.0, 2.5), BlowUpDomainError);
    CHECK_NOTHROW((void)f->value(0.0, 1.9));
    FieldPtr two = instantiate(spec_of(Family::TwoPseudoPeakon, {{"c1", 1.0}, {"c2", -2.0}}));
    CHECK_THROWS_AS((void)two->value(0.0, 2.0), BlowUpDomainError);  // s = -4 + 2t = 0
  }

  TEST_CASE("two-crest junctions are C^1 at both crests") {
    FieldPtr f = instantiate(spec_of(Family::TwoPseudoPeakon, {{"c1", 1.0}, {"c2", -2.0}}));
    for (double t : {0.0, 0.5}) {
      const auto crests = f->crest_positions(t);
      REQUIRE(crests.size() == 2);
      CHECK(crests[0] < crests[1]);
      for (double q : crests) {
        const Jet l = f->jet_one_sided(q, t, Side::Left);
        const Jet r = f->jet_one_sided(q, t, Side::Right);
        CHECK(l.u() == doctest::Approx(r.u()).epsilon(1e-12));
        CHECK(l.ux() == doctest::Approx(r.ux()).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("symmetry generators map solutions to solutions") {
    FieldPtr base = instantiate(spec_of(Family::TravelingMinus, {{"alpha1", 0.7}, {"c", 1.2}}));
    CHECK(max_rel_residual(*apply_symmetry(base, {Generator::X1, 0.4}), 21) < 1e-12);
    CHECK(max_rel_residual(*apply_symmetry(base, {Generator::X2, -0.3}), 22) < 1e-12);
    CHECK(max_rel_residual(*apply_symmetry(base, {Generator::X3, 0.25}), 23) < 1e-12);
    CHECK(max_rel_residual(*apply_symmetry(base, {Generator::X4, 0.6}), 24) < 1e-9);
    // X1 shifts crests
    FieldPtr moved = apply_symmetry(instantiate(collage(6.0)), {Generator::X1, 1.5});
    CHECK(moved->crest_positions(0.0)[0] == doctest::Approx(1.5));
    CHECK(max_rel_residual(*moved, 25) < 1e-12);
  }

  TEST_CASE("jump-direction metadata of the discontinuous family") {
    CHECK(entropy_admissible(spec_of(Family::DPShockPeakon, {{"c", 1.0}, {"t0", -3.0}})));
    CHECK_FALSE(entropy_admissible(spec_of(Family::DPShockPeakon, {{"c", 1.0}, {"t0", 3.0}})));
    CHECK_THROWS_AS(entropy_admissible(spec_of(Family::DPPeakon, {{"c", 1.0}})),
                    InvalidParamsError);
  }

  TEST_CASE("JSON round-trip of specs") {
    const SolutionSpec s = spec_of(Family::TravelingPlus, {{"c", 1.5}, {"alpha2", -0.25}});
    nlohmann::json j;
    pklab::to_json(j, s);
    SolutionSpec back;
    pklab::from_json(j, back);
    CHECK(back.family == s.family);
    CHECK(back.params == s.params);
  }
}
