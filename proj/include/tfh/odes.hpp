#pragma once

#include <utility>
#include <vector>

#include "tfh/types.hpp"

namespace tfh {

// Right-hand side x^(1-p) y^p of the second-order equation y'' = x^(1-p) y^p.
double ef_rhs(double x, double y, double p);

// Truncated expansion of the p=3/2 solution with y(0)=1, y'(0)=slope0 about
// the singular origin (y'' ~ x^(-1/2) there).  Terms through x^4; truncation
// error is O(x^(9/2)), below 1e-12 for x0 <= 1e-3.
std::pair<double, double> tf_series_start(double slope0, double x0);

// Lane-Emden start theta(0)=1, theta'(0)=0, terms through x^6.
std::pair<double, double> lane_emden_series_start(double p, double x0);

struct IntegrateOptions {
  Form form = Form::emden_fowler;
  double x0 = 1e-6;          // series-start abscissa
  double diverge_cap = 1e6;  // y above this counts as diverged
  int grid = 0;              // 0: record accepted steps; >=2: uniform grid
  std::vector<double> record_at;  // nonempty: record exactly these abscissas
                                  // (ascending, within [x0, x_max]); wins over grid
};

// Integrate from the series start at opts.x0 up to x_max (or until the
// solution crosses zero / exceeds the divergence cap; the table records which).
// Emden-Fowler form requires p = 3/2 (the series start is specific to the
// singular TF origin); Lane-Emden form accepts any p >= 0 and ignores slope0.
SolutionTable integrate_direct(const EquationParams& params, double slope0,
                               double x_max, double tol,
                               const IntegrateOptions& opts = {});

// Integrate y'' = x^(1-p) y^p from interior initial data (no singular start);
// used for general-p runs such as the homology-invariance sweep.
SolutionTable integrate_from(const EquationParams& params, const Sample& start,
                             double x_max, double tol, int grid = 0,
                             double diverge_cap = 1e6);

// Same run, recorded exactly at the given ascending abscissas (dense output).
SolutionTable integrate_from_at(const EquationParams& params, const Sample& start,
                                double x_max, double tol,
                                const std::vector<double>& record_at,
                                double diverge_cap = 1e6);

struct ShootOptions {
  double lo = -2.0;
  double hi = -1.0;
  double x_max = 600.0;      // classification horizon
  double x0 = 1e-6;
  double diverge_cap = 1e6;
};

struct ShootResult {
  double slope;
  double bracket_width;
  int iterations;
  // true when an endpoint came back unclassified at x_max before the bracket
  // reached tol; the midpoint is then the best resolvable estimate
  bool resolution_limited;
};

// Bisect the initial slope of the p=3/2 equation over [lo, hi]: slopes above
// the critical value diverge, slopes below cross zero.  Stops when the
// bracket is narrower than tol.
double shoot_initial_slope(double tol);
ShootResult shoot_initial_slope_ex(double tol, const ShootOptions& opts);

}  // namespace tfh
