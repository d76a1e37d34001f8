#pragma once

#include <map>
#include <string>

#include "peakonlab/expfield.hpp"
#include "peakonlab/jets.hpp"

#include <nlohmann/json_fwd.hpp>

namespace pklab {

enum class Family {
  Constant,
  InvariantExp,         // u = a t e^{-x} + e^{2x}/(5 beta)
  InvariantExpSimple,   // u = a t e^{-x}
  TravelingMinus,       // u = alpha1 e^{ct - x}
  TravelingPlus,        // u = -alpha2 e^{2(x-ct)} + sqrt(-3 c alpha2)/2 e^{x-ct}
  PseudoPeakon,         // C^1 peakon traveling at speed c
  NonConservativePeakon,// pseudo-peakon family with 1/(t-t0) amplitudes
  TwoPseudoPeakon,      // two-crest C^1 solution
  DPPeakon,             // DP peakon c e^{-|x-ct|}
  DPTwoPeakon,          // DP two-peakon (image of TwoPseudoPeakon under L)
  DPShockPeakon,        // DP peakon plus discontinuous odd part
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

struct SolutionSpec {
  Family family = Family::Constant;
  std::map<std::string, double> params;

  double param(const std::string& name) const;
  double param_or(const std::string& name, double fallback) const;
  bool has(const std::string& name) const { return params.count(name) != 0; }
};

void to_json(nlohmann::json& j, const SolutionSpec& spec);
void from_json(const nlohmann::json& j, SolutionSpec& spec);

// Validates the family parameter constraints; throws InvalidParamsError.
void validate(const SolutionSpec& spec);

FieldPtr instantiate(const SolutionSpec& spec);

enum class Generator { X1, X2, X3, X4 };

struct SymmetryAction {
  Generator generator = Generator::X1;
  double epsilon = 0.0;
};

// Group action on solutions:
//   X1: u(x,t) -> f(x - eps, t)
//   X2: u(x,t) -> f(x, t - eps)
//   X3: u(x,t) -> e^{eps} f(x, e^{eps} t)
//   X4: u(x,t) -> f(x,t) - eps e^{2x}
FieldPtr apply_symmetry(FieldPtr field, const SymmetryAction& action);

// Pseudo-peakon profile coefficients (p1, p2, p3) = (-c/6, -c/2, c/3):
// the unique amplitude triple making the glued profile C^1 with
// integral -c/2.
struct CollageCoefficients {
  double p1, p2, p3;
};
CollageCoefficients collage_coefficients(double c);

// Builds the pseudo-peakon spec for wave speed c and verifies the C^1
// junction at the crest numerically.  Throws DegenerateError for c = 0.
SolutionSpec collage(double c);

// Entropy admissibility of the DP shock-peakon (jump goes downward
// left-to-right, equivalently t0 < 0).
bool entropy_admissible(const SolutionSpec& spec);

}  // namespace pklab
