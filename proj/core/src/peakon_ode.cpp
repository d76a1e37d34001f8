#include "peakonlab/peakon_ode.hpp"

#include <cmath>

#include "peakonlab/expfield.hpp"

namespace pklab {

SinglePeakonState SinglePeakonState::make(double p2, double p3, double q) {
  SinglePeakonState s;
  s.p1 = p2 + p3;
  s.p2 = p2;
  s.p3 = p3;
  s.q = q;
  s.validate();
  return s;
}

void SinglePeakonState::validate() const {
  if (!std::isfinite(p1) || !std::isfinite(p2) || !std::isfinite(p3) || !std::isfinite(q))
    throw NonFiniteError("peakon state is not finite");
  if (p2 == 0.0 && p3 == 0.0)
    throw InvalidParamsError("amplitudes p2 and p3 must not both vanish");
  const double scale = std::abs(p2) + std::abs(p3);
  if (std::abs(p1 - (p2 + p3)) > 1e-9 * (1.0 + scale))
    throw InvalidParamsError("continuity constraint p1 = p2 + p3 violated");
}

SingleDerivs single_rhs(const SinglePeakonState& s) {
  s.validate();
  const double p2 = s.p2, p3 = s.p3;
  // rows: the three amplitude equations with p1 eliminated
  //   p2' + p3' + (p2+p3) q' = -(14/3 p2^2 + 9 p2 p3 + 9/2 p3^2)
  //   p2'        -   p2   q' =   6 p2^2 + 9 p2 p3 + 9/2 p3^2
  //          p3' - 2 p3   q' =  -8/3 p2^2
  const double A[3][3] = {{1.0, 1.0, p2 + p3},
                          {1.0, 0.0, -p2},
                          {0.0, 1.0, -2.0 * p3}};
  const double b[3] = {-(14.0 / 3.0 * p2 * p2 + 9.0 * p2 * p3 + 4.5 * p3 * p3),
                       6.0 * p2 * p2 + 9.0 * p2 * p3 + 4.5 * p3 * p3,
                       -8.0 / 3.0 * p2 * p2};

  double M[3][3];
  double rhs[3];
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) M[r][c] = A[r][c];
    rhs[r] = b[r];
  }

  auto det3 = [](const double (&m)[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };

  const double scale = 1.0 + std::abs(p2) + std::abs(p3);
  double det = det3(M);
  if (std::abs(det) <= 1e-12 * scale) {
    // The eliminated system degenerates exactly on the C^1 manifold
    // 2 p2 + 3 p3 = 0, where the first row is the sum of the other two
    // and its right-hand side matches identically.  Trajectories through
    // such states stay on the manifold, so the tangency condition
    // 2 p2' + 3 p3' = 0 replaces the dependent row.
    const double b2 = p2 * p2, b23 = p2 * p3, b3 = p3 * p3;
    const double defect = -8.0 * b2 - 18.0 * b23 - 9.0 * b3;  // b[0]-(b[1]+b[2])
    if (std::abs(defect) > 1e-9 * scale * scale)
      throw SingularSystemError("amplitude system is singular at this state");
    M[0][0] = 2.0;
    M[0][1] = 3.0;
    M[0][2] = 0.0;
    rhs[0] = 0.0;
    det = det3(M);
    if (std::abs(det) <= 1e-12 * scale)
      throw SingularSystemError("amplitude system is singular at this state");
  }

  auto cramer = [&](int col) {
    double C[3][3];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) C[r][c] = (c == col) ? rhs[r] : M[r][c];
    return det3(C) / det;
  };
  return {cramer(0), cramer(1), cramer(2)};
}

SinglePeakonState single_closed_form(double t, double c, double t0, double q0) {
  if (t == t0) throw BlowUpDomainError("closed form has a pole at t = t0");
  const double a = 1.0 / (t - t0);
  SinglePeakonState s;
  s.p1 = a / 6.0 - c / 6.0;
  s.p2 = -a / 2.0 - c / 2.0;
  s.p3 = 2.0 * a / 3.0 + c / 3.0;
  s.q = c * t + q0;
  s.validate();
  return s;
}

void TwoPeakonState::validate() const {
  if (!std::isfinite(p1) || !std::isfinite(p2) || !std::isfinite(q1) || !std::isfinite(q2))
    throw NonFiniteError("two-peakon state is not finite");
  if (p1 == 0.0 || p2 == 0.0)
    throw InvalidParamsError("two-peakon amplitudes must be nonzero");
}

TwoPeakonState two_closed_form(double t, double c1, double c2, double k1) {
  if (c1 == 0.0) throw InvalidParamsError("closed form needs c1 != 0");
  const double s = k1 + 2.0 * c1 * t + 2.0 * c2;
  if (s == 0.0) throw BlowUpDomainError("two-peakon amplitude pole");
  TwoPeakonState st;
  st.p2 = c1 / std::expm1(s);
  st.p1 = -st.p2;
  st.q1 = k1 + c2 + c1 * t;
  st.q2 = -c2 - c1 * t;
  st.validate();
  return st;
}

std::array<double, 6> two_residual(const TwoPeakonState& s, const TwoDerivs& d) {
  s.validate();
  const double e = std::exp(s.q1 - s.q2);
  const double cross = s.p1 * s.p2 * e;
  return {d.dp1 + s.p1 * d.dq1 - s.p1 * s.p1 + cross,
          d.dp2 - s.p2 * d.dq2 + s.p2 * s.p2 - cross,
          d.dp2 - 2.0 * s.p2 * d.dq2 + 2.0 * s.p2 * s.p2,
          d.dp1 + 2.0 * s.p1 * d.dq1 - 2.0 * s.p1 * s.p1,
          d.dp1 + 2.0 * cross,
          d.dp2 - 2.0 * cross};
}

FieldPtr assemble_field(const SinglePeakonState& s) {
  s.validate();
  class Snapshot : public PiecewiseExpField {
   public:
    explicit Snapshot(SinglePeakonState st) : st_(st) {}

   protected:
    ExpLayout layout(double) const override {
      ExpLayout lay;
      lay.crests = {st_.q};
      lay.regions.resize(2);
      lay.regions[0] = {{st_.p2, 0.0, 1.0, st_.q, 0.0},
                        {st_.p3, 0.0, 2.0, st_.q, 0.0}};
      lay.regions[1] = {{st_.p1, 0.0, -1.0, st_.q, 0.0}};
      return lay;
    }

   private:
    SinglePeakonState st_;
  };
  return std::make_shared<Snapshot>(s);
}

FieldPtr assemble_field(const TwoPeakonState& s) {
  s.validate();
  class Snapshot : public PiecewiseExpField {
   public:
    explicit Snapshot(TwoPeakonState st) : st_(st) {}

   protected:
    ExpLayout layout(double) const override {
      struct Crest {
        double p, q;
      };
      std::array<Crest, 2> crests = {{{st_.p1, st_.q1}, {st_.p2, st_.q2}}};
      if (crests[0].q > crests[1].q) std::swap(crests[0], crests[1]);
      ExpLayout lay;
      lay.crests = {crests[0].q, crests[1].q};
      lay.regions.resize(3);
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t i = 0; i < 2; ++i) {
          const Crest& cr = crests[i];
          if (r > i) {
            lay.regions[r].push_back({-cr.p / 6.0, 0.0, -1.0, cr.q, 0.0});
          } else {
            lay.regions[r].push_back({-cr.p / 2.0, 0.0, 1.0, cr.q, 0.0});
            lay.regions[r].push_back({cr.p / 3.0, 0.0, 2.0, cr.q, 0.0});
          }
        }
      }
      return lay;
    }

   private:
    TwoPeakonState st_;
  };
  return std::make_shared<Snapshot>(s);
}

namespace {

struct RawSingle {
  double p2, p3, q;
};

RawSingle rk4_step(const RawSingle& y, double dt) {
  auto f = [](const RawSingle& s) {
    SinglePeakonState st;
    st.p2 = s.p2;
    st.p3 = s.p3;
    st.p1 = s.p2 + s.p3;
    st.q = s.q;
    const SingleDerivs d = single_rhs(st);
    return RawSingle{d.dp2, d.dp3, d.dq};
  };
  auto axpy = [](const RawSingle& a, double h, const RawSingle& b) {
    return RawSingle{a.p2 + h * b.p2, a.p3 + h * b.p3, a.q + h * b.q};
  };
  const RawSingle k1 = f(y);
  const RawSingle k2 = f(axpy(y, 0.5 * dt, k1));
  const RawSingle k3 = f(axpy(y, 0.5 * dt, k2));
  const RawSingle k4 = f(axpy(y, dt, k3));
  return RawSingle{
      y.p2 + dt / 6.0 * (k1.p2 + 2.0 * k2.p2 + 2.0 * k3.p2 + k4.p2),
      y.p3 + dt / 6.0 * (k1.p3 + 2.0 * k2.p3 + 2.0 * k3.p3 + k4.p3),
      y.q + dt / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q)};
}

}  // namespace

SingleTrajectory integrate_single(const SinglePeakonState& init,
                                  const SingleOdeConfig& config) {
  init.validate();
  if (!(config.dt > 0.0) || !(config.t_end > 0.0))
    throw InvalidParamsError("integrator needs dt > 0 and t_end > 0");

  SingleTrajectory traj;
  RawSingle y{init.p2, init.p3, init.q};
  double t = 0.0;
  auto record = [&](double tt, const RawSingle& s) {
    SinglePeakonState st;
    st.p2 = s.p2;
    st.p3 = s.p3;
    st.p1 = s.p2 + s.p3;
    st.q = s.q;
    traj.times.push_back(tt);
    traj.states.push_back(st);
  };
  record(t, y);

  auto amplitude = [](const RawSingle& s) {
    return std::max(std::abs(s.p2), std::abs(s.p3));
  };

  while (t < config.t_end - 1e-15) {
    double dt = std::min(config.dt, config.t_end - t);
    // keep the relative amplitude change per step moderate: halve the
    // step until it is, so the blow-up monitor sees the growth
    RawSingle next{};
    bool ok = false;
    for (int halvings = 0; halvings < 48; ++halvings) {
      try {
        next = rk4_step(y, dt);
      } catch (const SingularSystemError&) {
        traj.status = OdeStatus::Singular;
        traj.t_detect = t;
        return traj;
      }
      const bool finite = std::isfinite(next.p2) && std::isfinite(next.p3) &&
                          std::isfinite(next.q);
      // 25% growth per step keeps dt well below the distance to any pole,
      // so the stages cannot straddle it
      if (finite &&
          amplitude(next) <= 1.25 * amplitude(y) + 0.5) {
        ok = true;
        break;
      }
      dt *= 0.5;
      if (dt < 1e-14) break;
    }
    if (!ok) {
      traj.status = OdeStatus::BlowUp;
      traj.t_detect = t;
      return traj;
    }
    y = next;
    t += dt;
    record(t, y);
    if (amplitude(y) > config.blowup_threshold) {
      traj.status = OdeStatus::BlowUp;
      traj.t_detect = t;
      return traj;
    }
  }
  traj.status = OdeStatus::Completed;
  return traj;
}

}  // namespace pklab
