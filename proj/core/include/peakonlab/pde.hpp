#pragma once

#include "peakonlab/grid.hpp"
#include "peakonlab/jets.hpp"

namespace pklab {

// Residual of the main equation,
//   u_t - u_txx - (16 u u_x - 8 u_x u_xx + 2 u_xx^2 - 4 u u_xxx + 2 u_x u_xxx).
double residual_local(const Jet& j);

// Right-hand side of the main equation solved for u_t - u_txx.
double local_rhs(const Jet& j);

enum class ReducedOdeName { R412, R414, R416, R424 };

struct ReducedOdeKind {
  ReducedOdeName name = ReducedOdeName::R416;
  double alpha = 0.0;
  double beta = 0.0;
  double c = 0.0;
  double c1 = 0.0;
};

struct ThetaJet {
  double z = 0.0;
  double th = 0.0, th1 = 0.0, th2 = 0.0, th3 = 0.0;
};

double residual_reduced(const ReducedOdeKind& kind, const ThetaJet& tj);

enum class NonlocalEq { Novikov16, DP };

enum class DerivativeMode { Spectral, Central4 };

// Nonlocal evolution right-hand sides on a periodic grid:
//   Novikov16: 4 u u_x - u_x^2 + d_x L^{-2}(6 u^2 + 2 u_x^2) + L^{-2}(u_x^2)
//   DP:        -v v_x - (3/2) d_x L^{-2}(v^2)
// with L^{-2} the Helmholtz inverse.
GridState rhs_nonlocal(const GridState& state, NonlocalEq which,
                       DerivativeMode mode = DerivativeMode::Spectral);

}  // namespace pklab
