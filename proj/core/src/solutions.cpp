#include "peakonlab/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <nlohmann/json.hpp>

namespace pklab {

namespace {

struct FamilyName {
  Family family;
  const char* name;
};

// kebab-case names are the CLI/JSON spelling; CamelCase is accepted on input
const FamilyName kNames[] = {
    {Family::Constant, "constant"},
    {Family::InvariantExp, "invariant-exp"},
    {Family::InvariantExpSimple, "invariant-exp-simple"},
    {Family::TravelingMinus, "traveling-minus"},
    {Family::TravelingPlus, "traveling-plus"},
    {Family::PseudoPeakon, "pseudo-peakon"},
    {Family::NonConservativePeakon, "non-conservative-peakon"},
    {Family::TwoPseudoPeakon, "two-pseudo-peakon"},
    {Family::DPPeakon, "dp-peakon"},
    {Family::DPTwoPeakon, "dp-two-peakon"},
    {Family::DPShockPeakon, "dp-shock-peakon"},
};

const FamilyName kAliases[] = {
    {Family::Constant, "Constant"},
    {Family::InvariantExp, "InvariantExp"},
    {Family::InvariantExpSimple, "InvariantExpSimple"},
    {Family::TravelingMinus, "TravelingMinus"},
    {Family::TravelingPlus, "TravelingPlus"},
    {Family::PseudoPeakon, "PseudoPeakon"},
    {Family::NonConservativePeakon, "NonConservativePeakon"},
    {Family::TwoPseudoPeakon, "TwoPseudoPeakon"},
    {Family::DPPeakon, "DPPeakon"},
    {Family::DPTwoPeakon, "DPTwoPeakon"},
    {Family::DPShockPeakon, "DPShockPeakon"},
};

}  // namespace

const char* family_name(Family f) {
  for (const auto& e : kNames)
    if (e.family == f) return e.name;
  throw InvalidParamsError("unknown family tag");
}

Family family_from_name(const std::string& name) {
  for (const auto& e : kNames)
    if (name == e.name) return e.family;
  for (const auto& e : kAliases)
    if (name == e.name) return e.family;
  throw InvalidParamsError("unknown solution family '" + name + "'");
}

double SolutionSpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end())
    throw InvalidParamsError(std::string(family_name(family)) + " requires parameter '" + name + "'");
  return it->second;
}

double SolutionSpec::param_or(const std::string& name, double fallback) const {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

void to_json(nlohmann::json& j, const SolutionSpec& spec) {
  j = nlohmann::json{{"family", family_name(spec.family)},
                     {"params", nlohmann::json::object()}};
  for (const auto& [name, value] : spec.params) j["params"][name] = value;
}

void from_json(const nlohmann::json& j, SolutionSpec& spec) {
  spec.family = family_from_name(j.at("family").get<std::string>());
  spec.params.clear();
  if (j.contains("params"))
    for (const auto& [name, value] : j.at("params").items())
      spec.params[name] = value.get<double>();
}

void validate(const SolutionSpec& spec) {
  switch (spec.family) {
    case Family::Constant:
      spec.param("c");
      break;
    case Family::InvariantExp:
      spec.param("a");
      if (spec.param("beta") == 0.0)
        throw InvalidParamsError("invariant-exp requires beta != 0");
      break;
    case Family::InvariantExpSimple:
      spec.param("a");
      break;
    case Family::TravelingMinus:
      spec.param("alpha1");
      spec.param("c");
      break;
    case Family::TravelingPlus: {
      const double c = spec.param("c");
      const double a2 = spec.param("alpha2");
      if (c * a2 > 0.0)
        throw InvalidParamsError("traveling-plus requires c*alpha2 <= 0");
      break;
    }
    case Family::PseudoPeakon:
      if (spec.param("c") == 0.0)
        throw InvalidParamsError("pseudo-peakon requires c != 0");
      break;
    case Family::NonConservativePeakon:
      if (spec.param("c") == 0.0)
        throw InvalidParamsError("non-conservative-peakon requires c != 0");
      spec.param("t0");
      break;
    case Family::TwoPseudoPeakon:
    case Family::DPTwoPeakon: {
      if (spec.param("c1") == 0.0)
        throw InvalidParamsError("two-crest families require c1 != 0");
      spec.param("c2");
      // Optional construction-time ordering check: the left crest stays
      // left of the right crest iff s(t) = k1 + 2 c2 + 2 c1 t <= 0.
      if (spec.has("tmin") || spec.has("tmax")) {
        const double k1 = spec.param_or("k1", 0.0);
        const double c1 = spec.param("c1");
        const double c2 = spec.param("c2");
        for (const char* key : {"tmin", "tmax"}) {
          if (!spec.has(key)) continue;
          const double s = k1 + 2.0 * c2 + 2.0 * c1 * spec.param(key);
          if (s > 0.0)
            throw InvalidParamsError("crest ordering violated on requested t-range");
        }
      }
      break;
    }
    case Family::DPPeakon:
      spec.param("c");
      break;
    case Family::DPShockPeakon:
      if (spec.param("c") == 0.0)
        throw InvalidParamsError("dp-shock-peakon requires c != 0");
      spec.param("t0");
      break;
  }
}

namespace {

// Single smooth region covering the whole line.
class SmoothExpField : public PiecewiseExpField {
 public:
  using Builder = std::vector<MovingExp> (*)(const SolutionSpec&, double);
  SmoothExpField(SolutionSpec spec, Builder builder)
      : spec_(std::move(spec)), builder_(builder) {}

 protected:
  ExpLayout layout(double t) const override {
    ExpLayout lay;
    lay.regions.push_back(builder_(spec_, t));
    return lay;
  }

  SolutionSpec spec_;
  Builder builder_;
};

std::vector<MovingExp> constant_terms(const SolutionSpec& spec, double) {
  return {{spec.param("c"), 0.0, 0.0, 0.0, 0.0}};
}

std::vector<MovingExp> invariant_exp_simple_terms(const SolutionSpec& spec, double t) {
  const double a = spec.param("a");
  return {{a * t, a, -1.0, 0.0, 0.0}};
}

std::vector<MovingExp> invariant_exp_terms(const SolutionSpec& spec, double t) {
  const double a = spec.param("a");
  const double beta = spec.param("beta");
  return {{a * t, a, -1.0, 0.0, 0.0}, {1.0 / (5.0 * beta), 0.0, 2.0, 0.0, 0.0}};
}

std::vector<MovingExp> traveling_minus_terms(const SolutionSpec& spec, double t) {
  const double c = spec.param("c");
  return {{spec.param("alpha1"), 0.0, -1.0, c * t, c}};
}

std::vector<MovingExp> traveling_plus_terms(const SolutionSpec& spec, double t) {
  const double c = spec.param("c");
  const double a2 = spec.param("alpha2");
  const double q = c * t;
  return {{-a2, 0.0, 2.0, q, c}, {std::sqrt(-3.0 * c * a2) / 2.0, 0.0, 1.0, q, c}};
}

// Peakon-shaped layout shared by the C^1 families: amplitudes (p1, p2, p3)
// on (e^{-z}, e^{z}, e^{2z}) with z = x - q, bounded halves glued at z = 0.
ExpLayout glued_layout(double p1, double dp1, double p2, double dp2, double p3,
                       double dp3, double q, double dq) {
  ExpLayout lay;
  lay.crests = {q};
  lay.regions.resize(2);
  lay.regions[0] = {{p2, dp2, 1.0, q, dq}, {p3, dp3, 2.0, q, dq}};
  lay.regions[1] = {{p1, dp1, -1.0, q, dq}};
  return lay;
}

class PseudoPeakonField : public PiecewiseExpField {
 public:
  explicit PseudoPeakonField(const SolutionSpec& spec)
      : c_(spec.param("c")), q0_(spec.param_or("q0", 0.0)) {}

 protected:
  ExpLayout layout(double t) const override {
    return glued_layout(-c_ / 6.0, 0.0, -c_ / 2.0, 0.0, c_ / 3.0, 0.0,
                        c_ * t + q0_, c_);
  }

  double c_, q0_;
};

class NonConservativePeakonField : public PiecewiseExpField {
 public:
  explicit NonConservativePeakonField(const SolutionSpec& spec)
      : c_(spec.param("c")), t0_(spec.param("t0")), q0_(spec.param_or("q0", 0.0)) {}

 protected:
  void check_time(double t) const override {
    if (t == t0_ || (t0_ > 0.0 && t >= t0_))
      throw BlowUpDomainError("amplitudes blow up at t0 = " + std::to_string(t0_));
  }

  ExpLayout layout(double t) const override {
    const double a = 1.0 / (t - t0_);
    const double da = -a * a;
    return glued_layout(a / 6.0 - c_ / 6.0, da / 6.0, -a / 2.0 - c_ / 2.0,
                        -da / 2.0, 2.0 * a / 3.0 + c_ / 3.0, 2.0 * da / 3.0,
                        c_ * t + q0_, c_);
  }

  double c_, t0_, q0_;
};

// Shared two-crest state for the C^1 equation and its DP image:
//   p2 = c1/(e^s - 1),  p1 = -p2,   s = k1 + 2 c1 t + 2 c2
//   q1 = k1 + c2 + c1 t,  q2 = -c2 - c1 t
struct TwoPeakonState {
  double p1, dp1, p2, dp2;
  double q1, dq1, q2, dq2;
};

TwoPeakonState two_peakon_state(double c1, double c2, double k1, double t) {
  const double s = k1 + 2.0 * c1 * t + 2.0 * c2;
  if (s == 0.0) throw BlowUpDomainError("two-crest amplitude pole at t = " + std::to_string(t));
  const double es = std::exp(s);
  TwoPeakonState st;
  st.p2 = c1 / (es - 1.0);
  st.dp2 = -2.0 * c1 * c1 * es / ((es - 1.0) * (es - 1.0));
  st.p1 = -st.p2;
  st.dp1 = -st.dp2;
  st.q1 = k1 + c2 + c1 * t;
  st.dq1 = c1;
  st.q2 = -c2 - c1 * t;
  st.dq2 = -c1;
  return st;
}

class TwoPseudoPeakonField : public PiecewiseExpField {
 public:
  explicit TwoPseudoPeakonField(const SolutionSpec& spec)
      : c1_(spec.param("c1")), c2_(spec.param("c2")), k1_(spec.param_or("k1", 0.0)) {}

 protected:
  void check_time(double t) const override {
    if (k1_ + 2.0 * c1_ * t + 2.0 * c2_ == 0.0)
      throw BlowUpDomainError("two-crest amplitude pole at t = " + std::to_string(t));
  }

  ExpLayout layout(double t) const override {
    const TwoPeakonState st = two_peakon_state(c1_, c2_, k1_, t);
    struct Crest {
      double p, dp, q, dq;
    };
    std::array<Crest, 2> crests = {{{st.p1, st.dp1, st.q1, st.dq1},
                                    {st.p2, st.dp2, st.q2, st.dq2}}};
    if (crests[0].q > crests[1].q) std::swap(crests[0], crests[1]);

    ExpLayout lay;
    lay.crests = {crests[0].q, crests[1].q};
    lay.regions.resize(3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t i = 0; i < 2; ++i) {
        const Crest& cr = crests[i];
        if (r > i) {
          // right of crest i: p * (-1/6) e^{-z}
          lay.regions[r].push_back({-cr.p / 6.0, -cr.dp / 6.0, -1.0, cr.q, cr.dq});
        } else {
          // left of crest i: p * (-1/2 e^{z} + 1/3 e^{2z})
          lay.regions[r].push_back({-cr.p / 2.0, -cr.dp / 2.0, 1.0, cr.q, cr.dq});
          lay.regions[r].push_back({cr.p / 3.0, cr.dp / 3.0, 2.0, cr.q, cr.dq});
        }
      }
    }
    return lay;
  }

  double c1_, c2_, k1_;
};

class DPPeakonField : public PiecewiseExpField {
 public:
  explicit DPPeakonField(const SolutionSpec& spec)
      : c_(spec.param("c")), q0_(spec.param_or("q0", 0.0)) {}

 protected:
  ExpLayout layout(double t) const override {
    const double q = c_ * t + q0_;
    ExpLayout lay;
    lay.crests = {q};
    lay.regions = {{{c_, 0.0, 1.0, q, c_}}, {{c_, 0.0, -1.0, q, c_}}};
    return lay;
  }

  double c_, q0_;
};

class DPTwoPeakonField : public PiecewiseExpField {
 public:
  explicit DPTwoPeakonField(const SolutionSpec& spec)
      : c1_(spec.param("c1")), c2_(spec.param("c2")), k1_(spec.param_or("k1", 0.0)) {}

 protected:
  void check_time(double t) const override {
    if (k1_ + 2.0 * c1_ * t + 2.0 * c2_ == 0.0)
      throw BlowUpDomainError("two-crest amplitude pole at t = " + std::to_string(t));
  }

  ExpLayout layout(double t) const override {
    const TwoPeakonState st = two_peakon_state(c1_, c2_, k1_, t);
    struct Crest {
      double p, dp, q, dq;
    };
    std::array<Crest, 2> crests = {{{st.p1, st.dp1, st.q1, st.dq1},
                                    {st.p2, st.dp2, st.q2, st.dq2}}};
    if (crests[0].q > crests[1].q) std::swap(crests[0], crests[1]);

    ExpLayout lay;
    lay.crests = {crests[0].q, crests[1].q};
    lay.regions.resize(3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t i = 0; i < 2; ++i) {
        const Crest& cr = crests[i];
        const double rate = (r > i) ? -1.0 : 1.0;  // p e^{-|z|}
        lay.regions[r].push_back({cr.p, cr.dp, rate, cr.q, cr.dq});
      }
    }
    return lay;
  }

  double c1_, c2_, k1_;
};

class DPShockPeakonField : public PiecewiseExpField {
 public:
  explicit DPShockPeakonField(const SolutionSpec& spec)
      : c_(spec.param("c")), t0_(spec.param("t0")), q0_(spec.param_or("q0", 0.0)) {}

 protected:
  void check_time(double t) const override {
    if (t == t0_ || (t0_ > 0.0 && t >= t0_))
      throw BlowUpDomainError("shock amplitude blows up at t0 = " + std::to_string(t0_));
  }

  ExpLayout layout(double t) const override {
    const double a = 1.0 / (t - t0_);
    const double da = -a * a;
    const double q = c_ * t + q0_;
    ExpLayout lay;
    lay.crests = {q};
    lay.regions = {{{c_ + a, da, 1.0, q, c_}}, {{c_ - a, -da, -1.0, q, c_}}};
    return lay;
  }

  double c_, t0_, q0_;
};

}  // namespace

FieldPtr instantiate(const SolutionSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Constant:
      return std::make_shared<SmoothExpField>(spec, constant_terms);
    case Family::InvariantExp:
      return std::make_shared<SmoothExpField>(spec, invariant_exp_terms);
    case Family::InvariantExpSimple:
      return std::make_shared<SmoothExpField>(spec, invariant_exp_simple_terms);
    case Family::TravelingMinus:
      return std::make_shared<SmoothExpField>(spec, traveling_minus_terms);
    case Family::TravelingPlus:
      return std::make_shared<SmoothExpField>(spec, traveling_plus_terms);
    case Family::PseudoPeakon:
      return std::make_shared<PseudoPeakonField>(spec);
    case Family::NonConservativePeakon:
      return std::make_shared<NonConservativePeakonField>(spec);
    case Family::TwoPseudoPeakon:
      return std::make_shared<TwoPseudoPeakonField>(spec);
    case Family::DPPeakon:
      return std::make_shared<DPPeakonField>(spec);
    case Family::DPTwoPeakon:
      return std::make_shared<DPTwoPeakonField>(spec);
    case Family::DPShockPeakon:
      return std::make_shared<DPShockPeakonField>(spec);
  }
  throw InvalidParamsError("unknown family tag");
}

class TransformedField : public AnalyticField {
 public:
  TransformedField(FieldPtr base, SymmetryAction action)
      : base_(std::move(base)), action_(action) {}

  std::vector<double> crest_positions(double t) const override {
    check_time(t);
    std::vector<double> crests = base_->crest_positions(base_time(t));
    if (action_.generator == Generator::X1)
      for (double& q : crests) q += action_.epsilon;
    return crests;
  }

 protected:
  void check_time(double t) const override { base_->check_time(base_time(t)); }

  Jet eval(double x, double t, Side side) const override {
    const double eps = action_.epsilon;
    switch (action_.generator) {
      case Generator::X1: {
        Jet j = base_->eval(x - eps, t, side);
        j.x = x;
        return j;
      }
      case Generator::X2: {
        Jet j = base_->eval(x, t - eps, side);
        j.t = t;
        return j;
      }
      case Generator::X3: {
        const double s = std::exp(eps);
        Jet j = base_->eval(x, s * t, side);
        j.t = t;
        for (int b = 0; b <= 4; ++b) {
          j.d[0][b] *= s;
          j.d[1][b] *= s * s;
        }
        return j;
      }
      case Generator::X4: {
        Jet j = base_->eval(x, t, side);
        double coef = eps * std::exp(2.0 * x);
        for (int b = 0; b <= 4; ++b) {
          j.d[0][b] -= coef;
          coef *= 2.0;
        }
        return j;
      }
    }
    throw InvalidParamsError("unknown symmetry generator");
  }

 private:
  double base_time(double t) const {
    switch (action_.generator) {
      case Generator::X2:
        return t - action_.epsilon;
      case Generator::X3:
        return std::exp(action_.epsilon) * t;
      default:
        return t;
    }
  }

  FieldPtr base_;
  SymmetryAction action_;
};

FieldPtr apply_symmetry(FieldPtr field, const SymmetryAction& action) {
  if (!field) throw InvalidParamsError("null field");
  return std::make_shared<TransformedField>(std::move(field), action);
}

CollageCoefficients collage_coefficients(double c) {
  if (c == 0.0) throw DegenerateError("collage of the zero speed is the trivial solution");
  return {-c / 6.0, -c / 2.0, c / 3.0};
}

SolutionSpec collage(double c) {
  collage_coefficients(c);  // rejects c = 0
  SolutionSpec spec;
  spec.family = Family::PseudoPeakon;
  spec.params = {{"c", c}, {"q0", 0.0}};

  // Postcondition: the glued profile is C^1 at the crest.
  FieldPtr field = instantiate(spec);
  const Jet left = field->jet_one_sided(0.0, 0.0, Side::Left);
  const Jet right = field->jet_one_sided(0.0, 0.0, Side::Right);
  const double tol = 1e-12 * (1.0 + std::abs(c));
  if (std::abs(left.u() - right.u()) > tol || std::abs(left.ux() - right.ux()) > tol)
    throw DegenerateError("collage junction is not C^1");
  return spec;
}

bool entropy_admissible(const SolutionSpec& spec) {
  if (spec.family != Family::DPShockPeakon)
    throw InvalidParamsError("entropy classification applies to dp-shock-peakon");
  return spec.param("t0") < 0.0;
}

}  // namespace pklab
