// peakonlab: command-line front end for the solution catalog, invariant
// checks, time stepping, kernel transforms, weak-form functionals,
// surface geometry, crest-amplitude ODEs and Fourier-side analysis.
//
// Conventions shared by every subcommand:
//   * CSV output has a header row, 17 significant digits, LF endings.
//   * JSON manifests echo the resolved configuration plus versions/seeds.
//   * Files are written atomically (temp + rename).
//   * exit 0: success (blow-up detection is a result, not an error);
//     exit 1: bad flags/inputs; exit 2: numeric failure.

#include <array>
#include <cinttypes>
#include <cmath>
#include <map>
#include <random>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "peakonlab/conslaws.hpp"
#include "peakonlab/evolve.hpp"
#include "peakonlab/fourier_field.hpp"
#include "peakonlab/geometry.hpp"
#include "peakonlab/grid.hpp"
#include "peakonlab/operators.hpp"
#include "peakonlab/parallel.hpp"
#include "peakonlab/pde.hpp"
#include "peakonlab/peakon_ode.hpp"
#include "peakonlab/sobolev.hpp"
#include "peakonlab/solutions.hpp"
#include "peakonlab/weakcheck.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pklab;

constexpr const char* kVersion = "1.0.0";

json versions() { return json{{"peakonlab", kVersion}, {"format", 1}}; }

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// "name=value;name=value" -> map
std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InvalidParamsError("expected name=value in '" + item + "'");
    const std::string name = item.substr(0, eq);
    std::size_t used = 0;
    const std::string val = item.substr(eq + 1);
    double v;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      throw InvalidParamsError("bad numeric value in '" + item + "'");
    }
    if (used != val.size())
      throw InvalidParamsError("bad numeric value in '" + item + "'");
    out[name] = v;
  }
  return out;
}

SolutionSpec make_spec(const std::string& family, const std::string& params) {
  SolutionSpec spec;
  spec.family = family_from_name(family);
  spec.params = parse_params(params);
  validate(spec);
  return spec;
}

// Initial profiles: "family:NAME;p=v;..." instantiates the catalog entry,
// "gaussian;amp=A;width=W" is A e^{-(x/W)^2}.
struct InitProfile {
  bool is_family = false;
  SolutionSpec spec;
  double amp = 1.0, width = 1.0;
  std::string text;
};

InitProfile parse_init(const std::string& text) {
  InitProfile p;
  p.text = text;
  if (text.rfind("family:", 0) == 0) {
    const std::string rest = text.substr(7);
    const auto semi = rest.find(';');
    p.is_family = true;
    p.spec = make_spec(rest.substr(0, semi),
                       semi == std::string::npos ? "" : rest.substr(semi + 1));
    return p;
  }
  if (text.rfind("gaussian", 0) == 0) {
    const auto semi = text.find(';');
    const auto params =
        parse_params(semi == std::string::npos ? "" : text.substr(semi + 1));
    if (params.count("amp")) p.amp = params.at("amp");
    if (params.count("width")) p.width = params.at("width");
    if (!(p.width > 0.0)) throw InvalidParamsError("gaussian width must be > 0");
    return p;
  }
  throw InvalidParamsError("init must start with 'family:' or 'gaussian'");
}

GridState sample_init(const InitProfile& p, double t, double L, std::size_t n,
                      bool periodic) {
  if (p.is_family) return sample_field(*instantiate(p.spec), t, L, n, periodic);
  GridState g = make_grid(L, n, periodic);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = g.x(i) / p.width;
    g.samples[i] = p.amp * std::exp(-x * x);
  }
  return g;
}

void emit(const json& report, bool as_json, const std::string& human) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

void write_text(const std::string& path, const std::string& content) {
  write_file_atomic(path, content);
}

// ---------------------------------------------------------------- solution

struct SolutionOpts {
  std::string family, params;
  double t = 0.0, xmin = -10.0, xmax = 10.0;
  std::size_t n = 1001;
  std::string out;
  bool as_json = false;
};

int run_solution_eval(const SolutionOpts& o) {
  if (!(o.xmax > o.xmin) || o.n < 2)
    throw InvalidParamsError("need xmax > xmin and n >= 2");
  SolutionSpec spec = make_spec(o.family, o.params);
  FieldPtr field = instantiate(spec);

  GridState g;
  g.x0 = o.xmin;
  g.h = (o.xmax - o.xmin) / static_cast<double>(o.n - 1);
  g.periodic = false;
  g.samples.resize(o.n);
  parallel_for(o.n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      g.samples[i] = field->value(g.x(i), o.t);
  });
  if (!o.out.empty()) write_csv(o.out, g);

  nlohmann::json spec_json;
  pklab::to_json(spec_json, spec);
  json report{{"command", "solution eval"},
              {"versions", versions()},
              {"spec", spec_json},
              {"t", o.t},
              {"xmin", o.xmin},
              {"xmax", o.xmax},
              {"n", o.n},
              {"crests", field->crest_positions(o.t)}};
  if (spec.family == Family::DPShockPeakon)
    report["entropy_admissible"] = entropy_admissible(spec);
  if (!o.out.empty()) report["out"] = o.out;
  emit(report, o.as_json,
       "wrote " + std::to_string(o.n) + " samples of " + o.family +
           (o.out.empty() ? " (no --out given, metadata only)" : " to " + o.out));
  return 0;
}

// -------------------------------------------------------------- invariants

struct InvariantOpts {
  std::string family, params;
  double t = 0.0, L = 40.0;
  std::size_t n = 16384;
  std::string out;
  bool as_json = false;
};

int run_invariants(const InvariantOpts& o) {
  SolutionSpec spec = make_spec(o.family, o.params);
  FieldPtr field = instantiate(spec);

  json row{{"t", o.t}};
  bool warn = false;
  for (QuantityIndex idx :
       {QuantityIndex::Q0, QuantityIndex::E2, QuantityIndex::H2,
        QuantityIndex::H3, QuantityIndex::Q1, QuantityIndex::H4}) {
    const QuantityResult r = quantity(idx, *field, o.t, o.L, o.n);
    row[quantity_name(idx)] = r.value;
    warn = warn || r.decay_warning;
  }
  nlohmann::json spec_json;
  pklab::to_json(spec_json, spec);
  json report{{"command", "invariants"}, {"versions", versions()},
              {"spec", spec_json},       {"L", o.L},
              {"n", o.n},                {"quantities", row},
              {"decay_warning", warn}};
  if (!o.out.empty()) write_text(o.out, report.dump(2) + "\n");
  emit(report, o.as_json,
       "Q0=" + fmt17(double(row["Q0"])) + " E2=" + fmt17(double(row["E2"])) +
           " H2=" + fmt17(double(row["H2"])) +
           (warn ? "  [decay warning at box edge]" : ""));
  return 0;
}

// ----------------------------------------------------------------- conslaw

struct ConslawOpts {
  int law = 1;
  std::string field = "fourier-random";
  std::uint64_t seed = 42;
  std::size_t points = 100, fields = 1;
  double tol = 1e-8;
  bool as_json = false;
};

int run_conslaw_verify(const ConslawOpts& o) {
  if (o.law < 1 || o.law > 5) throw InvalidParamsError("law must be 1..5");
  if (o.field != "fourier-random")
    throw InvalidParamsError("only the fourier-random probe field is supported");

  double worst = 0.0;
  for (std::size_t f = 0; f < o.fields; ++f) {
    const FourierField probe = FourierField::random(o.seed + f);
    std::mt19937_64 rng(o.seed ^ (0x9e3779b97f4a7c15ULL + f));
    std::uniform_real_distribution<double> ux(-3.0, 3.0), ut(-1.0, 1.0);
    for (std::size_t p = 0; p < o.points; ++p) {
      const double x = ux(rng), t = ut(rng);
      const double res = identity_residual(o.law, probe, x, t);
      const Jet j = probe.jet_at(x, t);
      double dd[2][5];
      for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 4; ++b) dd[a][b] = j.d[a][b];
      const double scale =
          1.0 + std::abs(law_phi(o.law, x, dd) * residual_local(j));
      worst = std::max(worst, std::abs(res) / scale);
    }
  }
  const bool pass = worst <= o.tol;
  json report{{"command", "conslaw verify"},
              {"versions", versions()},
              {"law", o.law},
              {"field", o.field},
              {"seed", o.seed},
              {"fields", o.fields},
              {"points", o.points},
              {"max_relative_residual", worst},
              {"tolerance", o.tol},
              {"pass", pass}};
  emit(report, o.as_json,
       "law " + std::to_string(o.law) + ": max relative residual " +
           fmt17(worst) + (pass ? " (pass)" : " (FAIL)"));
  return 0;
}

// ------------------------------------------------------------------ evolve

struct EvolveOpts {
  std::string eq = "novikov16";
  std::string init;
  double L = 30.0, dt = 1e-3, T = 1.0, threshold = 1e6;
  std::size_t n = 1024, monitor_every = 10;
  std::string mode = "spectral";
  std::string outdir = "evolve-out";
  bool as_json = false;
};

int run_evolve(const EvolveOpts& o) {
  EvolveConfig cfg;
  if (o.eq == "novikov16")
    cfg.equation = NonlocalEq::Novikov16;
  else if (o.eq == "dp")
    cfg.equation = NonlocalEq::DP;
  else
    throw InvalidParamsError("--eq must be novikov16 or dp");
  if (o.mode == "spectral")
    cfg.mode = DerivativeMode::Spectral;
  else if (o.mode == "central4")
    cfg.mode = DerivativeMode::Central4;
  else
    throw InvalidParamsError("--mode must be spectral or central4");
  cfg.L = o.L;
  cfg.n = o.n;
  cfg.dt = o.dt;
  cfg.t_end = o.T;
  cfg.monitor_every = o.monitor_every;
  cfg.blowup_threshold = o.threshold;
  cfg.validate();

  const InitProfile init = parse_init(o.init);
  Trajectory traj;
  if (init.is_family && init.spec.family == Family::DPShockPeakon) {
    // discontinuous data: advance the exact jump dynamics instead of the
    // (invalid) method of lines; see evolve_shock
    if (cfg.equation != NonlocalEq::DP)
      throw InvalidParamsError("dp-shock-peakon initial data needs --eq dp");
    ShockState st;
    st.m = init.spec.param("c");
    st.s = -1.0 / (0.0 - init.spec.param("t0"));
    st.q = init.spec.param_or("q0", 0.0);
    traj = evolve_shock(st, cfg);
  } else {
    const GridState u0 = sample_init(init, 0.0, o.L, o.n, /*periodic=*/true);
    traj = evolve(u0, cfg);
  }

  std::filesystem::create_directories(o.outdir);
  json monitor_rows = json::array();
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    char name[32];
    std::snprintf(name, sizeof name, "state_%04zu.csv", s);
    write_csv((std::filesystem::path(o.outdir) / name).string(), traj.states[s]);
    const MonitorRow& m = traj.monitors[s];
    monitor_rows.push_back(json{{"t", m.t},
                                {"Q0", m.Q0},
                                {"E2", m.E2},
                                {"H2", m.H2},
                                {"sup", m.sup}});
  }

  const char* status = traj.status == EvolveStatus::Completed ? "Completed"
                       : traj.status == EvolveStatus::BlowUp  ? "BlowUp"
                                                              : "NonFinite";
  json manifest{{"command", "evolve"},
                {"versions", versions()},
                {"config",
                 json{{"eq", o.eq},
                      {"init", o.init},
                      {"L", o.L},
                      {"n", o.n},
                      {"dt", o.dt},
                      {"T", o.T},
                      {"monitor_every", o.monitor_every},
                      {"blowup_threshold", o.threshold},
                      {"mode", o.mode}}},
                {"status", status},
                {"monitors", monitor_rows}};
  if (traj.status != EvolveStatus::Completed)
    manifest["t_detect"] = traj.t_detect;
  if (traj.states.size() >= 2) {
    try {
      manifest["crest_speed"] = crest_speed(traj);
    } catch (const FlatFieldError&) {
      // too flat to track; omit the entry
    }
  }
  write_text((std::filesystem::path(o.outdir) / "manifest.json").string(),
             manifest.dump(2) + "\n");
  emit(manifest, o.as_json,
       std::string("status ") + status +
           (traj.status != EvolveStatus::Completed
                ? " at t = " + fmt17(traj.t_detect)
                : "") +
           "; manifest in " + o.outdir);
  return traj.status == EvolveStatus::NonFinite ? 2 : 0;
}

// ------------------------------------------------------------------- miura

struct MiuraOpts {
  std::string profile = "gaussian";
  double t = 0.0, L = 20.0;
  std::size_t n = 4096;
  std::string out;
  bool as_json = false;
};

int run_miura(const std::string& direction, const MiuraOpts& o) {
  const InitProfile init = parse_init(o.profile);
  const GridState u = sample_init(init, o.t, o.L, o.n, /*periodic=*/false);

  json report{{"command", "miura " + direction},
              {"versions", versions()},
              {"profile", o.profile},
              {"t", o.t},
              {"L", o.L},
              {"n", o.n}};
  GridState result;
  std::string human;
  if (direction == "forward") {
    if (init.is_family) {
      // exact map on the analytic field, then sample
      FieldPtr v = miura_forward(instantiate(init.spec));
      result = sample_field(*v, o.t, o.L, o.n, false);
    } else {
      result = miura_forward(u);
    }
    human = "forward map sampled on " + std::to_string(o.n) + " points";
  } else if (direction == "inverse") {
    bool warn = false;
    result = miura_inverse(u, &warn);
    report["decay_warning"] = warn;
    human = std::string("inverse map applied") +
            (warn ? " [decay warning at right edge]" : "");
  } else {  // roundtrip
    bool warn = false;
    const GridState v = miura_forward(u);
    result = miura_inverse(v, &warn);
    double sup = 0.0;
    for (std::size_t i = 0; i < o.n; ++i)
      sup = std::max(sup, std::abs(result.samples[i] - u.samples[i]));
    report["sup_discrepancy"] = sup;
    report["decay_warning"] = warn;
    human = "round trip sup discrepancy " + fmt17(sup);
  }
  if (!o.out.empty()) {
    write_csv(o.out, result);
    report["out"] = o.out;
  }
  emit(report, o.as_json, human);
  return 0;
}

// --------------------------------------------------------------- weakcheck

struct WeakOpts {
  std::string form = "ode";
  std::string family = "pseudo-peakon", params = "c=1";
  double c = 6.0, center = 0.0, width = 3.0;
  double tcenter = 0.5, twidth = 0.4, T = 1.0;
  double eps = 1e-3;
  double tol = 0.0;  // 0: per-form default
  bool as_json = false;
};

int run_weakcheck(const WeakOpts& o) {
  json report{{"command", "weakcheck"}, {"versions", versions()}, {"form", o.form}};
  if (o.form == "ode") {
    const double tol = o.tol > 0.0 ? o.tol : 1e-9;
    FieldPtr profile = instantiate(collage(o.c));
    const Bump phi{o.center, o.width};
    const double res = weak_residual_ode(profile, o.c, phi, tol);
    report["testfn"] = json{{"center", o.center}, {"width", o.width}};
    report["c"] = o.c;
    report["residual"] = res;
    report["tolerance"] = 1e-6;
    report["pass"] = std::abs(res) <= 1e-6;
    emit(report, o.as_json, "profile residual " + fmt17(res));
  } else if (o.form == "pde") {
    const double tol = o.tol > 0.0 ? o.tol : 1e-7;
    FieldPtr field = instantiate(make_spec(o.family, o.params));
    const SpaceTimeBump phi{{o.center, o.width}, {o.tcenter, o.twidth}};
    const double res = weak_residual_pde(field, phi, o.T, tol);
    report["testfn"] = json{{"center", o.center},
                            {"width", o.width},
                            {"t_center", o.tcenter},
                            {"t_width", o.twidth}};
    report["family"] = o.family;
    report["params"] = o.params;
    report["residual"] = res;
    report["tolerance"] = 1e-5;
    report["pass"] = std::abs(res) <= 1e-5;
    emit(report, o.as_json, "space-time residual " + fmt17(res));
  } else if (o.form == "excision") {
    const double tol = o.tol > 0.0 ? o.tol : 1e-10;
    const Bump phi{o.center, o.width};
    const double plus = boundary_term_plus(o.eps, o.c, phi, tol);
    const double minus = boundary_term_minus(o.eps, o.c, phi, tol);
    const double limit =
        o.c * o.c / 36.0 * phi.value(0.0) + o.c * o.c / 9.0 * phi.d1(0.0);
    report["testfn"] = json{{"center", o.center}, {"width", o.width}};
    report["c"] = o.c;
    report["eps"] = o.eps;
    report["plus"] = plus;
    report["minus"] = minus;
    report["limit_plus"] = -limit;
    report["limit_minus"] = limit;
    report["sum"] = plus + minus;
    emit(report, o.as_json,
         "I+ = " + fmt17(plus) + ", I- = " + fmt17(minus) +
             ", sum = " + fmt17(plus + minus));
  } else {
    throw InvalidParamsError("--form must be ode, pde or excision");
  }
  return 0;
}

// ---------------------------------------------------------------- geometry

struct GeometryOpts {
  std::string family, params;
  double xmin = -5.0, xmax = 5.0, tmin = 0.0, tmax = 0.0;
  std::size_t nx = 21, nt = 1;
  double stencil = 1e-3;
  std::string out;
  bool as_json = false;
};

int run_geometry(const GeometryOpts& o) {
  if (!(o.xmax >= o.xmin) || o.nx < 1 || o.nt < 1)
    throw InvalidParamsError("bad sampling window");
  FieldPtr field = instantiate(make_spec(o.family, o.params));

  std::string csv = "x,t,E,F,G,K,generic_flag\n";
  std::size_t generic_count = 0, rows = 0;
  for (std::size_t it = 0; it < o.nt; ++it) {
    const double t =
        o.nt == 1 ? o.tmin
                  : o.tmin + (o.tmax - o.tmin) * static_cast<double>(it) /
                        static_cast<double>(o.nt - 1);
    for (std::size_t ix = 0; ix < o.nx; ++ix) {
      const double x =
          o.nx == 1 ? o.xmin
                    : o.xmin + (o.xmax - o.xmin) * static_cast<double>(ix) /
                          static_cast<double>(o.nx - 1);
      double E = std::nan(""), F = std::nan(""), G = std::nan("");
      double K = std::nan("");
      int flag = 0;
      try {
        const Jet j = field->jet_at(x, t);
        const MetricCoefficients m = metric(j);
        E = m.E;
        F = m.F;
        G = m.G;
        flag = (std::abs(genericity(j)) > 1e-10 && m.admissible()) ? 1 : 0;
        if (flag) K = curvature(*field, x, t, o.stencil);
      } catch (const CrestPointError&) {
        // crest line: leave the row empty of metric data
      } catch (const DegenerateMetricError&) {
        flag = 0;
      }
      csv += fmt17(x) + "," + fmt17(t) + "," + fmt17(E) + "," + fmt17(F) + "," +
             fmt17(G) + "," + fmt17(K) + "," + std::to_string(flag) + "\n";
      generic_count += flag;
      ++rows;
    }
  }
  if (!o.out.empty()) write_text(o.out, csv);

  json report{{"command", "geometry"}, {"versions", versions()},
              {"family", o.family},    {"params", o.params},
              {"rows", rows},          {"generic_rows", generic_count}};
  if (!o.out.empty()) report["out"] = o.out;
  emit(report, o.as_json,
       std::to_string(generic_count) + "/" + std::to_string(rows) +
           " generic sample points" +
           (o.out.empty() ? "" : "; CSV in " + o.out));
  return 0;
}

// -------------------------------------------------------------- peakon-ode

struct PeakonOdeOpts {
  // single-crest flags
  double p2 = 0.0, p3 = 0.0, q = 0.0;
  bool explicit_state = false;
  double c = 1.0, t0 = 1.0, q0 = 0.0;
  double dt = 1e-3, T = 1.0, threshold = 1e6;
  // two-crest flags
  double c1 = 1.0, c2 = 1.0, k1 = 0.0;
  std::size_t nt = 100;
  std::string out;
  bool as_json = false;
};

int run_peakon_single(const PeakonOdeOpts& o) {
  SinglePeakonState init;
  if (o.explicit_state)
    init = SinglePeakonState::make(o.p2, o.p3, o.q);
  else
    init = single_closed_form(0.0, o.c, o.t0, o.q0);

  SingleOdeConfig cfg;
  cfg.dt = o.dt;
  cfg.t_end = o.T;
  cfg.blowup_threshold = o.threshold;
  const SingleTrajectory traj = integrate_single(init, cfg);

  std::string csv = "t,p1,p2,p3,q\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const SinglePeakonState& s = traj.states[i];
    csv += fmt17(traj.times[i]) + "," + fmt17(s.p1) + "," + fmt17(s.p2) + "," +
           fmt17(s.p3) + "," + fmt17(s.q) + "\n";
  }
  if (!o.out.empty()) write_text(o.out, csv);

  // conserved-quantity drift of the assembled profile along the trajectory
  std::vector<std::pair<double, double>> q0s, e2s, h2s;
  const std::size_t stride = std::max<std::size_t>(1, traj.times.size() / 32);
  for (std::size_t i = 0; i < traj.times.size(); i += stride) {
    FieldPtr f = assemble_field(traj.states[i]);
    q0s.emplace_back(traj.times[i], quantity(QuantityIndex::Q0, *f, 0.0, 40.0, 4096).value);
    e2s.emplace_back(traj.times[i], quantity(QuantityIndex::E2, *f, 0.0, 40.0, 4096).value);
    h2s.emplace_back(traj.times[i], quantity(QuantityIndex::H2, *f, 0.0, 40.0, 4096).value);
  }
  const char* status = traj.status == OdeStatus::Completed ? "Completed"
                       : traj.status == OdeStatus::BlowUp  ? "BlowUp"
                                                           : "Singular";
  json report{{"command", "peakon-ode single"},
              {"versions", versions()},
              {"status", status},
              {"steps", traj.times.size()},
              {"drifts",
               json{{"Q0", drift(q0s)}, {"E2", drift(e2s)}, {"H2", drift(h2s)}}}};
  if (traj.status != OdeStatus::Completed) report["t_detect"] = traj.t_detect;
  if (!o.out.empty()) report["out"] = o.out;
  emit(report, o.as_json,
       std::string("status ") + status +
           (traj.status != OdeStatus::Completed
                ? " at t = " + fmt17(traj.t_detect)
                : ""));
  return 0;
}

int run_peakon_two(const PeakonOdeOpts& o) {
  if (o.nt < 2) throw InvalidParamsError("need at least two sample times");
  std::string csv = "t,p1,p2,q1,q2\n";
  double worst = 0.0;
  for (std::size_t i = 0; i < o.nt; ++i) {
    const double t = o.T * static_cast<double>(i) / static_cast<double>(o.nt - 1);
    const TwoPeakonState s = two_closed_form(t, o.c1, o.c2, o.k1);
    // derivatives of the closed form
    const double es = std::exp(o.k1 + 2.0 * o.c1 * t + 2.0 * o.c2);
    TwoDerivs d;
    d.dp2 = -2.0 * o.c1 * o.c1 * es / ((es - 1.0) * (es - 1.0));
    d.dp1 = -d.dp2;
    d.dq1 = o.c1;
    d.dq2 = -o.c1;
    for (double r : two_residual(s, d)) worst = std::max(worst, std::abs(r));
    csv += fmt17(t) + "," + fmt17(s.p1) + "," + fmt17(s.p2) + "," +
           fmt17(s.q1) + "," + fmt17(s.q2) + "\n";
  }
  if (!o.out.empty()) write_text(o.out, csv);

  json report{{"command", "peakon-ode two"},
              {"versions", versions()},
              {"c1", o.c1},
              {"c2", o.c2},
              {"k1", o.k1},
              {"times", o.nt},
              {"max_residual", worst},
              {"pass", worst <= 1e-10}};
  if (!o.out.empty()) report["out"] = o.out;
  emit(report, o.as_json, "max system residual " + fmt17(worst));
  return 0;
}

// ----------------------------------------------------------------- sobolev

struct SobolevOpts {
  std::string profile = "family:pseudo-peakon;c=6";
  double t = 0.0, L = 20.0, s = 1.0;
  std::size_t n = 4096;
  std::string out;
  bool as_json = false;
};

int run_sobolev(const SobolevOpts& o) {
  const InitProfile init = parse_init(o.profile);
  const GridState g = sample_init(init, o.t, o.L, o.n, /*periodic=*/true);
  const Spectrum sp = spectrum(g);

  std::string csv = "k,re,im,magnitude2\n";
  for (std::size_t i = 0; i < sp.wavenumbers.size(); ++i) {
    const auto& c = sp.coefficients[i];
    csv += fmt17(sp.wavenumbers[i]) + "," + fmt17(c.real()) + "," +
           fmt17(c.imag()) + "," + fmt17(std::norm(c)) + "\n";
  }
  if (!o.out.empty()) write_text(o.out, csv);

  const double norm = hs_norm(sp, o.s);
  const GridState g2 = sample_init(init, o.t, o.L, 2 * o.n, true);
  const double norm2 = hs_norm(spectrum(g2), o.s);

  json report{{"command", "sobolev"},
              {"versions", versions()},
              {"profile", o.profile},
              {"t", o.t},
              {"L", o.L},
              {"n", o.n},
              {"s", o.s},
              {"norm", norm},
              {"refinement_ratio", norm2 / norm},
              {"decay_warning", sp.decay_warning}};
  if (!o.out.empty()) report["out"] = o.out;
  emit(report, o.as_json,
       "H^s norm " + fmt17(norm) + " (refinement ratio " +
           fmt17(norm2 / norm) + ")");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for a pair of peakon-bearing integrable equations"};
  app.require_subcommand(1);
  app.set_config("--config", "", "plain-text defaults file (key = value); flags override");

  SolutionOpts so;
  auto* solution = app.add_subcommand("solution", "evaluate catalog solutions");
  solution->require_subcommand(1);
  auto* sol_eval = solution->add_subcommand("eval", "sample a solution on a grid");
  sol_eval->add_option("--family", so.family, "solution family name")->required();
  sol_eval->add_option("--param", so.params, "name=value;... family parameters");
  sol_eval->add_option("--t", so.t, "evaluation time");
  sol_eval->add_option("--xmin", so.xmin, "left end of the sample window");
  sol_eval->add_option("--xmax", so.xmax, "right end of the sample window");
  sol_eval->add_option("--n", so.n, "sample count");
  sol_eval->add_option("--out", so.out, "CSV output path");
  sol_eval->add_flag("--json", so.as_json, "machine-readable report on stdout");

  InvariantOpts io;
  auto* invariants = app.add_subcommand("invariants", "conserved quantities of a solution");
  invariants->add_option("--family", io.family, "solution family name")->required();
  invariants->add_option("--param", io.params, "name=value;... family parameters");
  invariants->add_option("--t", io.t, "evaluation time");
  invariants->add_option("--L", io.L, "half-length of the quadrature box");
  invariants->add_option("--n", io.n, "quadrature nodes");
  invariants->add_option("--out", io.out, "JSON output path");
  invariants->add_flag("--json", io.as_json, "machine-readable report on stdout");

  ConslawOpts co;
  auto* conslaw = app.add_subcommand("conslaw", "conservation-law identities");
  conslaw->require_subcommand(1);
  auto* verify = conslaw->add_subcommand("verify", "check an identity off-shell");
  verify->add_option("--law", co.law, "law index 1..5")->required();
  verify->add_option("--field", co.field, "probe field kind (fourier-random)");
  verify->add_option("--seed", co.seed, "probe field seed");
  verify->add_option("--points", co.points, "sample points per field");
  verify->add_option("--fields", co.fields, "number of probe fields");
  verify->add_option("--tol", co.tol, "pass tolerance on the relative residual");
  verify->add_flag("--json", co.as_json, "machine-readable report on stdout");

  EvolveOpts eo;
  auto* evolve_cmd = app.add_subcommand("evolve", "time-step the nonlocal form");
  evolve_cmd->add_option("--eq", eo.eq, "novikov16 or dp");
  evolve_cmd->add_option("--init", eo.init, "family:NAME;p=v;... or gaussian;amp=A;width=W")->required();
  evolve_cmd->add_option("--L", eo.L, "half-length of the periodic box");
  evolve_cmd->add_option("--n", eo.n, "grid points");
  evolve_cmd->add_option("--dt", eo.dt, "time step");
  evolve_cmd->add_option("--T", eo.T, "end time");
  evolve_cmd->add_option("--monitor-every", eo.monitor_every, "steps between monitor rows");
  evolve_cmd->add_option("--blowup-threshold", eo.threshold, "sup-norm blow-up threshold");
  evolve_cmd->add_option("--mode", eo.mode, "spatial derivative: spectral or central4");
  evolve_cmd->add_option("--outdir", eo.outdir, "output directory for states + manifest");
  evolve_cmd->add_flag("--json", eo.as_json, "print the manifest on stdout");

  MiuraOpts mo;
  auto* miura = app.add_subcommand("miura", "first-order map between the two equations");
  miura->require_subcommand(1);
  std::vector<CLI::App*> miura_subs;
  for (const char* dir : {"forward", "inverse", "roundtrip"}) {
    auto* sub = miura->add_subcommand(dir);
    sub->add_option("--profile", mo.profile, "family:NAME;... or gaussian;amp=A;width=W");
    sub->add_option("--t", mo.t, "evaluation time");
    sub->add_option("--L", mo.L, "half-length of the sample box");
    sub->add_option("--n", mo.n, "sample count");
    sub->add_option("--out", mo.out, "CSV output path");
    sub->add_flag("--json", mo.as_json, "machine-readable report on stdout");
    miura_subs.push_back(sub);
  }

  WeakOpts wo;
  auto* weak = app.add_subcommand("weakcheck", "weak-form residual functionals");
  weak->add_option("--form", wo.form, "ode, pde or excision");
  weak->add_option("--c", wo.c, "wave speed of the glued profile");
  weak->add_option("--family", wo.family, "field family for --form pde");
  weak->add_option("--param", wo.params, "field parameters for --form pde");
  weak->add_option("--center", wo.center, "test-function center");
  weak->add_option("--width", wo.width, "test-function width");
  weak->add_option("--tcenter", wo.tcenter, "temporal bump center (pde)");
  weak->add_option("--twidth", wo.twidth, "temporal bump width (pde)");
  weak->add_option("--T", wo.T, "time horizon (pde)");
  weak->add_option("--eps", wo.eps, "excision half-width");
  weak->add_option("--tol", wo.tol, "quadrature tolerance override");
  weak->add_flag("--json", wo.as_json, "machine-readable report on stdout");

  GeometryOpts go;
  auto* geometry = app.add_subcommand("geometry", "metric and curvature samples");
  geometry->add_option("--family", go.family, "solution family name")->required();
  geometry->add_option("--param", go.params, "name=value;... family parameters");
  geometry->add_option("--xmin", go.xmin, "left end of the sample window");
  geometry->add_option("--xmax", go.xmax, "right end of the sample window");
  geometry->add_option("--nx", go.nx, "spatial sample count");
  geometry->add_option("--tmin", go.tmin, "first sample time");
  geometry->add_option("--tmax", go.tmax, "last sample time");
  geometry->add_option("--nt", go.nt, "time sample count");
  geometry->add_option("--stencil", go.stencil, "curvature difference spacing");
  geometry->add_option("--out", go.out, "CSV output path");
  geometry->add_flag("--json", go.as_json, "machine-readable report on stdout");

  PeakonOdeOpts po;
  auto* pode = app.add_subcommand("peakon-ode", "crest-amplitude dynamical systems");
  pode->require_subcommand(1);
  auto* psingle = pode->add_subcommand("single", "integrate the one-crest system");
  auto* state_opt = psingle->add_option("--p2", po.p2, "initial left-side amplitude (with --p3/--q)");
  psingle->add_option("--p3", po.p3, "initial left-side amplitude");
  psingle->add_option("--q", po.q, "initial crest position");
  psingle->add_option("--c", po.c, "closed-form wave speed (default start)");
  psingle->add_option("--t0", po.t0, "closed-form pole time");
  psingle->add_option("--q0", po.q0, "closed-form crest offset");
  psingle->add_option("--dt", po.dt, "time step");
  psingle->add_option("--T", po.T, "end time");
  psingle->add_option("--blowup-threshold", po.threshold, "amplitude blow-up threshold");
  psingle->add_option("--out", po.out, "per-step CSV path");
  psingle->add_flag("--json", po.as_json, "machine-readable report on stdout");
  auto* ptwo = pode->add_subcommand("two", "verify the two-crest closed form");
  ptwo->add_option("--c1", po.c1, "speed parameter");
  ptwo->add_option("--c2", po.c2, "phase parameter");
  ptwo->add_option("--k1", po.k1, "separation parameter");
  ptwo->add_option("--T", po.T, "end time");
  ptwo->add_option("--nt", po.nt, "sample times");
  ptwo->add_option("--out", po.out, "per-step CSV path");
  ptwo->add_flag("--json", po.as_json, "machine-readable report on stdout");

  SobolevOpts sbo;
  auto* sobolev = app.add_subcommand("sobolev", "spectra and H^s norms");
  sobolev->add_option("--profile", sbo.profile, "family:NAME;... or gaussian;amp=A;width=W");
  sobolev->add_option("--t", sbo.t, "evaluation time");
  sobolev->add_option("--L", sbo.L, "half-length of the periodic box");
  sobolev->add_option("--n", sbo.n, "sample count");
  sobolev->add_option("--s", sbo.s, "Sobolev exponent");
  sobolev->add_option("--out", sbo.out, "spectrum CSV path");
  sobolev->add_flag("--json", sbo.as_json, "machine-readable report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sol_eval->parsed()) return run_solution_eval(so);
    if (invariants->parsed()) return run_invariants(io);
    if (verify->parsed()) return run_conslaw_verify(co);
    if (evolve_cmd->parsed()) return run_evolve(eo);
    for (std::size_t i = 0; i < miura_subs.size(); ++i)
      if (miura_subs[i]->parsed())
        return run_miura(std::array{"forward", "inverse", "roundtrip"}[i], mo);
    if (weak->parsed()) return run_weakcheck(wo);
    if (geometry->parsed()) return run_geometry(go);
    if (psingle->parsed()) {
      po.explicit_state = state_opt->count() > 0;
      return run_peakon_single(po);
    }
    if (ptwo->parsed()) return run_peakon_two(po);
    if (sobolev->parsed()) return run_sobolev(sbo);
  } catch (const InvalidParamsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BlowUpDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand selected\n";
  return 1;
}
