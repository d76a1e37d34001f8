#include "peakonlab/operators.hpp"

#include <array>
#include <cmath>
#include <memory>

#include "peakonlab/fft.hpp"

namespace pklab {

namespace {

// m_p = int_0^h s^p e^{k s} ds, p = 0..3.  Series branch for small |k h|
// (the closed form loses digits to cancellation there).
std::array<double, 4> power_moments(double k, double h) {
  std::array<double, 4> m{};
  const double kh = k * h;
  if (std::abs(kh) < 0.5) {
    for (int p = 0; p <= 3; ++p) {
      double c = 1.0;  // (k h)^j / j!
      double sum = 1.0 / (p + 1.0);
      for (int j = 1; j < 40; ++j) {
        c *= kh / j;
        const double add = c / (p + j + 1.0);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
      }
      m[p] = std::pow(h, p + 1) * sum;
    }
  } else {
    const double ekh = std::exp(kh);
    m[0] = std::expm1(kh) / k;
    double hp = 1.0;
    for (int p = 1; p <= 3; ++p) {
      hp *= h;
      m[p] = (hp * ekh - p * m[p - 1]) / k;
    }
  }
  return m;
}

// Weights w_j with int_0^h P(s) e^{k s} ds = sum_j w_j f(nodes[j]) for the
// cubic interpolant P of f through the given stencil offsets.
std::array<double, 4> cubic_panel_weights(double k, double h,
                                          const std::array<double, 4>& nodes) {
  const std::array<double, 4> m = power_moments(k, h);
  std::array<double, 4> w{};
  for (int j = 0; j < 4; ++j) {
    // expand the Lagrange basis l_j(s) = prod_{i != j} (s - x_i)/(x_j - x_i)
    std::array<double, 4> poly{1.0, 0.0, 0.0, 0.0};
    double denom = 1.0;
    int deg = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == j) continue;
      denom *= nodes[j] - nodes[i];
      for (int p = deg; p >= 0; --p) {
        poly[p + 1] += poly[p];
        poly[p] *= -nodes[i];
      }
      ++deg;
    }
    for (int p = 0; p <= 3; ++p) w[j] += poly[p] * m[p];
    w[j] /= denom;
  }
  return w;
}

struct SweepWeights {
  std::array<double, 4> interior;  // stencil offsets {-h, 0, h, 2h}
  std::array<double, 4> first;     // {0, h, 2h, 3h}
  std::array<double, 4> last;      // {-2h, -h, 0, h}
};

SweepWeights make_weights(double k, double h) {
  SweepWeights sw;
  sw.interior = cubic_panel_weights(k, h, {-h, 0.0, h, 2.0 * h});
  sw.first = cubic_panel_weights(k, h, {0.0, h, 2.0 * h, 3.0 * h});
  sw.last = cubic_panel_weights(k, h, {-2.0 * h, -h, 0.0, h});
  return sw;
}

// Contribution of panel [x_i, x_{i+1}] weighted by e^{k (y - x_i)}.
double panel(const std::vector<double>& f, std::size_t n, std::size_t i,
             const SweepWeights& sw, bool periodic) {
  if (periodic) {
    const auto& w = sw.interior;
    return w[0] * f[(i + n - 1) % n] + w[1] * f[i] + w[2] * f[(i + 1) % n] +
           w[3] * f[(i + 2) % n];
  }
  if (i == 0) {
    const auto& w = sw.first;
    return w[0] * f[0] + w[1] * f[1] + w[2] * f[2] + w[3] * f[3];
  }
  if (i + 2 >= n) {
    const auto& w = sw.last;
    return w[0] * f[i - 2] + w[1] * f[i - 1] + w[2] * f[i] + w[3] * f[i + 1];
  }
  const auto& w = sw.interior;
  return w[0] * f[i - 1] + w[1] * f[i] + w[2] * f[i + 1] + w[3] * f[i + 2];
}

}  // namespace

std::vector<double> sweep_left(const GridState& g, double k) {
  g.validate();
  if (!(k > 0.0)) throw InvalidParamsError("kernel rate must be positive");
  const std::size_t n = g.size();
  const double h = g.h;
  const double a = std::exp(-k * h);
  // panel integrand e^{-k (x_{i+1} - y)} = e^{-k h} e^{k (y - x_i)}
  const SweepWeights sw = make_weights(k, h);
  const std::size_t panels = g.periodic ? n : n - 1;

  std::vector<double> out(n, 0.0);
  double head = 0.0;
  if (g.periodic) {
    double loop = 0.0;
    for (std::size_t i = 0; i < panels; ++i)
      loop = a * loop + a * panel(g.samples, n, i, sw, true);
    const double d = std::exp(-k * h * static_cast<double>(n));
    head = loop / (1.0 - d);
  }
  out[0] = head;
  for (std::size_t i = 0; i + 1 < n; ++i)
    out[i + 1] = a * out[i] + a * panel(g.samples, n, i, sw, g.periodic);
  return out;
}

std::vector<double> sweep_right(const GridState& g, double k) {
  g.validate();
  if (!(k > 0.0)) throw InvalidParamsError("kernel rate must be positive");
  const std::size_t n = g.size();
  const double h = g.h;
  const double a = std::exp(-k * h);
  // panel integrand e^{-k (y - x_i)}
  const SweepWeights sw = make_weights(-k, h);

  std::vector<double> out(n, 0.0);
  double tail = 0.0;
  if (g.periodic) {
    double loop = 0.0;
    for (std::size_t i = n; i-- > 0;)
      loop = a * loop + panel(g.samples, n, i, sw, true);
    const double d = std::exp(-k * h * static_cast<double>(n));
    // R_0 over one period then closed geometrically; shift to R_{n-1}
    tail = a * loop / (1.0 - d);
    out[n - 1] = tail + panel(g.samples, n, n - 1, sw, true);
    for (std::size_t i = n - 1; i-- > 0;)
      out[i] = a * out[i + 1] + panel(g.samples, n, i, sw, true);
    return out;
  }
  out[n - 1] = 0.0;
  for (std::size_t i = n - 1; i-- > 0;)
    out[i] = a * out[i + 1] + panel(g.samples, n, i, sw, false);
  return out;
}

GridState helmholtz_inverse(const GridState& g) {
  const std::vector<double> L = sweep_left(g, 1.0);
  const std::vector<double> R = sweep_right(g, 1.0);
  GridState out = g;
  for (std::size_t i = 0; i < g.size(); ++i) out.samples[i] = 0.5 * (L[i] + R[i]);
  return out;
}

GridState helmholtz_inverse_dx(const GridState& g) {
  const std::vector<double> L = sweep_left(g, 1.0);
  const std::vector<double> R = sweep_right(g, 1.0);
  GridState out = g;
  for (std::size_t i = 0; i < g.size(); ++i) out.samples[i] = 0.5 * (R[i] - L[i]);
  return out;
}

GridState helmholtz_inverse_fft(const GridState& g) {
  auto spectrum = fft_forward(g);
  const std::size_t n = g.size();
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const double kappa = fft_wavenumber(k, n, g.h);
    spectrum[k] /= 1.0 + kappa * kappa;
  }
  GridState out = g;
  out.samples = fft_inverse(std::move(spectrum), n);
  return out;
}

namespace {

class MiuraExpField : public PiecewiseExpField {
 public:
  explicit MiuraExpField(std::shared_ptr<const PiecewiseExpField> base)
      : base_(std::move(base)) {}

 protected:
  void check_time(double t) const override { base_->layout_at(t); }

  ExpLayout layout(double t) const override {
    ExpLayout lay = base_->layout_at(t);
    for (auto& region : lay.regions) {
      for (MovingExp& term : region) {
        const double s = 2.0 * term.rate - 4.0;
        term.amp *= s;
        term.damp *= s;
      }
    }
    return lay;
  }

 private:
  std::shared_ptr<const PiecewiseExpField> base_;
};

}  // namespace

FieldPtr miura_forward(const FieldPtr& field) {
  auto exp = std::dynamic_pointer_cast<const PiecewiseExpField>(field);
  if (!exp)
    throw InvalidParamsError("exact first-order map needs a piecewise-exponential field");
  return std::make_shared<MiuraExpField>(std::move(exp));
}

GridState miura_forward(const GridState& g) {
  g.validate();
  const GridState dx = g.periodic ? spectral_derivative(g, 1) : central4_derivative(g);
  GridState out = g;
  for (std::size_t i = 0; i < g.size(); ++i)
    out.samples[i] = 2.0 * dx.samples[i] - 4.0 * g.samples[i];
  return out;
}

GridState miura_inverse(const GridState& g, bool* decay_warning) {
  if (decay_warning) {
    double peak = 0.0;
    for (double v : g.samples) peak = std::max(peak, std::abs(v));
    const double edge = std::abs(g.samples.back());
    *decay_warning = !g.periodic && peak > 0.0 && edge > 1e-8 * peak;
  }
  const std::vector<double> R = sweep_right(g, 2.0);
  GridState out = g;
  for (std::size_t i = 0; i < g.size(); ++i) out.samples[i] = -0.5 * R[i];
  return out;
}

}  // namespace pklab
