#include "peakonlab/evolve.hpp"

#include <algorithm>
#include <cmath>

namespace pklab {

void EvolveConfig::validate() const {
  if (!(L > 0.0)) throw InvalidParamsError("box half-length must be positive");
  if (n < 16) throw InvalidParamsError("need at least 16 grid points");
  if (!(dt > 0.0)) throw InvalidParamsError("time step must be positive");
  if (!(t_end > 0.0)) throw InvalidParamsError("end time must be positive");
  if (monitor_every == 0) throw InvalidParamsError("monitor_every must be >= 1");
  if (!(blowup_threshold > 0.0))
    throw InvalidParamsError("blow-up threshold must be positive");
}

namespace {

double sup_norm(const GridState& g) {
  double m = 0.0;
  for (double v : g.samples) m = std::max(m, std::abs(v));
  return m;
}

bool all_finite(const GridState& g) {
  for (double v : g.samples)
    if (!std::isfinite(v)) return false;
  return true;
}

MonitorRow monitor_row(double t, const GridState& g) {
  MonitorRow row;
  row.t = t;
  row.Q0 = quantity(QuantityIndex::Q0, g).value;
  row.E2 = quantity(QuantityIndex::E2, g).value;
  row.H2 = quantity(QuantityIndex::H2, g).value;
  row.sup = sup_norm(g);
  return row;
}

}  // namespace

Trajectory evolve(const GridState& initial, const EvolveConfig& config) {
  config.validate();
  initial.validate();
  if (!initial.periodic)
    throw InvalidParamsError("time stepping needs a periodic grid");

  Trajectory traj;
  GridState y = initial;
  const std::size_t n = y.size();
  double t = 0.0;

  auto record = [&](double tt) {
    traj.times.push_back(tt);
    traj.states.push_back(y);
    traj.monitors.push_back(monitor_row(tt, y));
  };
  record(t);

  auto axpy = [&](const GridState& a, double h, const GridState& b) {
    GridState out = a;
    for (std::size_t i = 0; i < n; ++i) out.samples[i] += h * b.samples[i];
    return out;
  };

  const auto total_steps =
      static_cast<std::size_t>(std::ceil(config.t_end / config.dt - 1e-12));
  for (std::size_t step = 0; step < total_steps; ++step) {
    const double dt = std::min(config.dt, config.t_end - t);

    GridState next;
    try {
      const GridState k1 = rhs_nonlocal(y, config.equation, config.mode);
      const GridState k2 =
          rhs_nonlocal(axpy(y, 0.5 * dt, k1), config.equation, config.mode);
      const GridState k3 =
          rhs_nonlocal(axpy(y, 0.5 * dt, k2), config.equation, config.mode);
      const GridState k4 =
          rhs_nonlocal(axpy(y, dt, k3), config.equation, config.mode);
      next = y;
      for (std::size_t i = 0; i < n; ++i)
        next.samples[i] += dt / 6.0 *
                           (k1.samples[i] + 2.0 * k2.samples[i] +
                            2.0 * k3.samples[i] + k4.samples[i]);
    } catch (const NonFiniteError&) {
      traj.status = EvolveStatus::NonFinite;
      traj.t_detect = t;
      return traj;
    }

    t += dt;
    if (!all_finite(next)) {
      traj.status = EvolveStatus::NonFinite;
      traj.t_detect = t;
      return traj;
    }
    y = std::move(next);
    if (sup_norm(y) > config.blowup_threshold) {
      record(t);
      traj.status = EvolveStatus::BlowUp;
      traj.t_detect = t;
      return traj;
    }
    if ((step + 1) % config.monitor_every == 0 || t >= config.t_end - 1e-12)
      record(t);
  }
  traj.status = EvolveStatus::Completed;
  return traj;
}

namespace {

GridState sample_shock(const ShockState& st, const EvolveConfig& cfg) {
  GridState g = make_grid(cfg.L, cfg.n, /*periodic=*/true);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const double z = g.x(i) - st.q;
    if (z < 0.0)
      g.samples[i] = (st.m - st.s) * std::exp(z);
    else if (z > 0.0)
      g.samples[i] = (st.m + st.s) * std::exp(-z);
    else
      g.samples[i] = st.m;
  }
  return g;
}

}  // namespace

Trajectory evolve_shock(const ShockState& init, const EvolveConfig& config) {
  config.validate();
  if (!std::isfinite(init.m) || !std::isfinite(init.s) || !std::isfinite(init.q))
    throw NonFiniteError("shock state is not finite");

  Trajectory traj;
  ShockState y = init;
  double t = 0.0;
  auto record = [&](double tt) {
    const GridState g = sample_shock(y, config);
    traj.times.push_back(tt);
    traj.states.push_back(g);
    traj.monitors.push_back(monitor_row(tt, g));
  };
  record(t);

  auto amplitude = [](const ShockState& s) {
    return std::max(std::abs(s.m - s.s), std::abs(s.m + s.s));
  };

  std::size_t accepted = 0;
  while (t < config.t_end - 1e-15) {
    double dt = std::min(config.dt, config.t_end - t);
    ShockState next{};
    bool ok = false;
    for (int halvings = 0; halvings < 48; ++halvings) {
      // RK4 on s' = s^2; m and q are exact
      const double s = y.s;
      const double k1 = s * s;
      const double s2 = s + 0.5 * dt * k1, k2 = s2 * s2;
      const double s3 = s + 0.5 * dt * k2, k3 = s3 * s3;
      const double s4 = s + dt * k3, k4 = s4 * s4;
      next.s = s + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      next.m = y.m;
      next.q = y.q + dt * y.m;
      // growth cap keeps the step below the distance to the pole
      if (std::isfinite(next.s) &&
          std::abs(next.s) <= 1.25 * std::abs(y.s) + 0.5) {
        ok = true;
        break;
      }
      dt *= 0.5;
      if (dt < 1e-14) break;
    }
    if (!ok) {
      traj.status = EvolveStatus::BlowUp;
      traj.t_detect = t;
      return traj;
    }
    y = next;
    t += dt;
    ++accepted;
    if (amplitude(y) > config.blowup_threshold) {
      record(t);
      traj.status = EvolveStatus::BlowUp;
      traj.t_detect = t;
      return traj;
    }
    if (accepted % config.monitor_every == 0 || t >= config.t_end - 1e-12)
      record(t);
  }
  traj.status = EvolveStatus::Completed;
  return traj;
}

double crest_speed(const Trajectory& traj) {
  if (traj.states.size() < 2)
    throw InvalidParamsError("need at least two monitored states");

  std::vector<double> ts, qs;
  double offset = 0.0;  // unwraps periodic crossings
  double prev = 0.0;
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    const GridState& g = traj.states[s];
    const std::size_t n = g.size();
    const double period = g.length();
    std::size_t imax = 0;
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::abs(g.samples[i]);
      if (a > vmax) {
        vmax = a;
        imax = i;
      }
    }
    if (vmax < 1e-14)
      throw FlatFieldError("field is too flat to locate a crest");
    // parabolic refinement through the three neighbouring samples
    const double ym = std::abs(g.samples[(imax + n - 1) % n]);
    const double y0 = vmax;
    const double yp = std::abs(g.samples[(imax + 1) % n]);
    const double denom = ym - 2.0 * y0 + yp;
    const double shift =
        (std::abs(denom) > 1e-300) ? 0.5 * (ym - yp) / denom : 0.0;
    double q = g.x(imax) + std::clamp(shift, -0.5, 0.5) * g.h;

    if (!ts.empty()) {
      while (q + offset - prev > 0.5 * period) offset -= period;
      while (q + offset - prev < -0.5 * period) offset += period;
    }
    prev = q + offset;
    ts.push_back(traj.times[s]);
    qs.push_back(prev);
  }

  // least-squares slope
  const double m = static_cast<double>(ts.size());
  double st = 0.0, sq = 0.0, stt = 0.0, stq = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    st += ts[i];
    sq += qs[i];
    stt += ts[i] * ts[i];
    stq += ts[i] * qs[i];
  }
  const double denom = m * stt - st * st;
  if (std::abs(denom) < 1e-300)
    throw InvalidParamsError("monitored times are degenerate");
  return (m * stq - st * sq) / denom;
}

}  // namespace pklab
