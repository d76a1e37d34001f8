#pragma once

#include <cstdint>
#include <vector>

#include "peakonlab/jets.hpp"

namespace pklab {

// Smooth field built from randomly drawn cosine modes
// A cos(k x + w t + p).  Not a solution of anything: used to probe
// identities that must hold off-shell for arbitrary fields.
class FourierField : public AnalyticField {
 public:
  struct Mode {
    double amp, k, w, phase;
  };

  explicit FourierField(std::vector<Mode> modes);

  // modes cosine waves, |amp| <= max_amp, wavenumbers and frequencies in
  // [-3, 3], drawn from the given seed.
  static FourierField random(std::uint64_t seed, int modes = 10,
                             double max_amp = 1.0);

 protected:
  Jet eval(double x, double t, Side side) const override;

 private:
  std::vector<Mode> modes_;
};

}  // namespace pklab
