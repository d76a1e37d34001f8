#include "peakonlab/fourier_field.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace pklab {

FourierField::FourierField(std::vector<Mode> modes) : modes_(std::move(modes)) {
  if (modes_.empty()) throw InvalidParamsError("fourier field needs at least one mode");
}

FourierField FourierField::random(std::uint64_t seed, int modes, double max_amp) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(-max_amp, max_amp);
  std::uniform_real_distribution<double> freq(-3.0, 3.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  std::vector<Mode> out;
  out.reserve(static_cast<std::size_t>(modes));
  for (int i = 0; i < modes; ++i) out.push_back({amp(rng), freq(rng), freq(rng), phase(rng)});
  return FourierField(std::move(out));
}

Jet FourierField::eval(double x, double t, Side) const {
  Jet j;
  j.x = x;
  j.t = t;
  constexpr double kHalfPi = M_PI / 2.0;
  for (const Mode& m : modes_) {
    const double theta = m.k * x + m.w * t + m.phase;
    double kb = m.amp;
    for (int b = 0; b <= 4; ++b) {
      j.d[0][b] += kb * std::cos(theta + b * kHalfPi);
      j.d[1][b] += m.w * kb * std::cos(theta + (b + 1) * kHalfPi);
      kb *= m.k;
    }
  }
  return j;
}

}  // namespace pklab
