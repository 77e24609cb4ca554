#pragma once

#include <array>
#include <string>
#include <vector>

#include "tfh/homology.hpp"
#include "tfh/types.hpp"

namespace tfh {

// du/dv = u(2-p+pv-u) / (v(1+u-v)) along Coppel trajectories
double coppel_rhs(double u, double v, double p);

// du/dv = u(3+pv-u) / (v(u-v-1)) along Milne trajectories
double milne_rhs(double u, double v, double p);

// ds/dtau = (4s + tau^(3/2)) / (s + 3tau)
double dresner_rhs(double tau, double s);

// du/dt = -8(1 - t u^2) / (1 - t^2 u), the reduced TF equation
double majorana_rhs(double t, double u);

// du/dt = 2(b/a) (1 - 4tu^2/(3ab^2)) / (1 + t^2 u/(3a^2 b)); reduces to
// majorana_rhs for the canonical constants
double majorana_general_rhs(double t, double u, const MajoranaConstants& consts);

// u'(1) at the 0/0 boundary point (t,u)=(1,1): the root of a^2 + 18a + 8 = 0
// in (-1, 0), i.e. -9 + sqrt(73).
double majorana_boundary_slope();

// Second-order coefficient of u = 1 + a1(t-1) + c2(t-1)^2 + ... at t=1,
// obtained by matching the reduced equation one order further.
double majorana_boundary_curvature();

enum class ReducedOutcome { completed, hit_singularity };

// Monotone grid of (independent, dependent) samples of a reduced first-order
// equation: (t, u) for Coppel/Milne/Majorana-style charts, (tau, s) for
// Dresner.  For Coppel/Milne the independent variable is v.
struct ReducedSolution {
  Chart chart = Chart::majorana;
  std::vector<std::array<double, 2>> samples;
  std::string boundary;
  ReducedOutcome outcome = ReducedOutcome::completed;
  double stop_at = 0.0;  // crossing location when outcome == hit_singularity
};

// Integrate the reduced TF equation from the series start at t = 1-eps down
// to t = 0 and resample on a uniform grid over [0,1] with the exact endpoint
// (1,1) appended.  Throws SingularityError if the denominator vanishes on
// the way (branch/tolerance failure).
ReducedSolution solve_majorana(int grid_size, double tol, double eps);

// Adaptive integration of the chosen reduced equation from
// start = (independent, dependent) with start[0] == range[0], over
// [range[0], range[1]] (either direction).  A vanishing denominator stops
// the run with a structured hit_singularity outcome.
ReducedSolution solve_reduced_generic(Chart chart, double p,
                                      std::array<double, 2> start,
                                      std::array<double, 2> range, double tol);

// Exact cross-chart algebra tau = 144 t^6, s = -432 u t^8 applied nodewise;
// produces Dresner-chart data covering tau = 0 from a Majorana solution.
ReducedSolution dresner_from_majorana(const ReducedSolution& majorana);

}  // namespace tfh
