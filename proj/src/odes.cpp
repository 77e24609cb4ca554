#include "tfh/odes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tfh/rk45.hpp"

namespace tfh {

namespace {

using LD = long double;
using St = State<LD, 2>;

bool is_integer(double p) { return p == std::floor(p); }

// y^p with the p = 3/2 hot path; y < 0 is clamped to 0 for fractional p so
// integrator stages may probe past a zero crossing (the event stop handles
// the crossing itself)
LD pow_p(LD y, double p) {
  if (p == 1.5L) {
    if (y <= 0) return 0;
    return y * std::sqrt(y);
  }
  if (p == 0.0) return 1;
  if (p == 1.0) return y;
  if (y <= 0) return is_integer(p) ? std::pow(y, (LD)p) : (LD)0;
  return std::pow(y, (LD)p);
}

template <class R>
std::pair<R, R> tf_series(R B, R x) {
  const R sx = std::sqrt(x);
  const R x2 = x * x;
  // y = 1 + B x + (4/3) x^(3/2) + (2/5) B x^(5/2) + (1/3) x^3
  //       + (3/70) B^2 x^(7/2) + (2/15) B x^4 + O(x^(9/2))
  const R y = 1 + B * x + R(4.0L / 3) * x * sx + R(2.0L / 5) * B * x2 * sx +
              R(1.0L / 3) * x2 * x + R(3.0L / 70) * B * B * x2 * x * sx +
              R(2.0L / 15) * B * x2 * x2;
  const R yp = B + 2 * sx + B * x * sx + x2 + R(3.0L / 20) * B * B * x2 * sx +
               R(8.0L / 15) * B * x2 * x;
  return {y, yp};
}

template <class R>
std::pair<R, R> le_series(double p, R x) {
  const R a2 = R(1.0L / 6);
  const R a4 = R(p) / 120;
  const R a6 = (R(p) * R(p) / 120 + R(p) * (R(p) - 1) / 72) / 42;
  const R x2 = x * x;
  const R th = 1 + a2 * x2 + a4 * x2 * x2 + a6 * x2 * x2 * x2;
  const R thp = 2 * a2 * x + 4 * a4 * x2 * x + 6 * a6 * x2 * x2 * x;
  return {th, thp};
}

struct RunOutcome {
  OdeResult<LD, 2> res;
  StopReason stop;
  double x_stop;
};

// events: index 0 = solution crossed zero, index 1 = divergence cap
RunOutcome run_system(Form form, double p, LD x0, LD x1, St y0, double tol,
                      double cap, int grid,
                      const std::vector<double>& record_at = {}) {
  auto rhs = [form, p](LD x, const St& s, St& d) {
    d[0] = s[1];
    if (form == Form::emden_fowler)
      d[1] = std::pow(x, (LD)(1.0 - p)) * pow_p(s[0], p);
    else
      d[1] = pow_p(s[0], p) - 2 * s[1] / x;
  };

  OdeOptions<LD, 2> opt;
  opt.rtol = (LD)std::max(tol, 1e-17);
  opt.atol = (LD)1e-24;
  if (!record_at.empty()) {
    opt.grid.reserve(record_at.size());
    for (double x : record_at) opt.grid.push_back((LD)x);
  } else if (grid >= 2) {
    opt.grid.resize(grid);
    for (int i = 0; i < grid; ++i)
      opt.grid[i] = x0 + (x1 - x0) * (LD)i / (LD)(grid - 1);
    opt.grid.back() = x1;
  }

  std::vector<EventFn<LD, 2>> events;
  events.push_back([](LD, const St& s) { return s[0]; });
  events.push_back([cap](LD, const St& s) { return (LD)cap - s[0]; });

  RunOutcome out{integrate_ode(rhs, x0, x1, y0, opt, events), StopReason::reached_end,
                 (double)x1};
  if (out.res.outcome == OdeOutcome::stalled)
    throw std::runtime_error("integration stalled (step size underflow)");
  if (out.res.outcome == OdeOutcome::event_stop) {
    out.stop = out.res.event_index == 0 ? StopReason::crossed_zero : StopReason::diverged;
    out.x_stop = (double)out.res.x_final;
  }
  return out;
}

SolutionTable to_table(const RunOutcome& run, const EquationParams& params,
                       double slope0, Form form) {
  SolutionTable t;
  t.params = params;
  t.slope0 = slope0;
  t.form = form;
  t.stop = run.stop;
  t.x_stop = run.x_stop;
  t.samples.reserve(run.res.xs.size());
  for (std::size_t i = 0; i < run.res.xs.size(); ++i)
    t.samples.push_back({(double)run.res.xs[i], (double)run.res.ys[i][0],
                         (double)run.res.ys[i][1]});
  return t;
}

}  // namespace

EquationParams EquationParams::for_exponent(double p) {
  const double q =
      p == 1.0 ? std::numeric_limits<double>::quiet_NaN() : (3.0 - p) / (p - 1.0);
  return {p, q};
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::reached_end: return "reached_end";
    case StopReason::crossed_zero: return "crossed_zero";
    case StopReason::diverged: return "diverged";
  }
  return "unknown";
}

const char* chart_name(Chart c) {
  switch (c) {
    case Chart::coppel: return "coppel";
    case Chart::milne: return "milne";
    case Chart::dresner: return "dresner";
    case Chart::majorana: return "majorana";
  }
  return "unknown";
}

double ef_rhs(double x, double y, double p) {
  if (x <= 0) throw std::domain_error("ef_rhs: x must be positive");
  if (y < 0 && !is_integer(p))
    throw std::domain_error("ef_rhs: y must be nonnegative for fractional p");
  return std::pow(x, 1.0 - p) * std::pow(y, p);
}

std::pair<double, double> tf_series_start(double slope0, double x0) {
  if (x0 <= 0) throw std::domain_error("tf_series_start: x0 must be positive");
  return tf_series<double>(slope0, x0);
}

std::pair<double, double> lane_emden_series_start(double p, double x0) {
  if (x0 <= 0) throw std::domain_error("lane_emden_series_start: x0 must be positive");
  return le_series<double>(p, x0);
}

SolutionTable integrate_direct(const EquationParams& params, double slope0,
                               double x_max, double tol, const IntegrateOptions& opts) {
  if (tol <= 0) throw std::domain_error("integrate_direct: tol must be positive");
  if (opts.x0 <= 0 || x_max <= opts.x0)
    throw std::domain_error("integrate_direct: need 0 < x0 < x_max");
  St y0;
  if (opts.form == Form::emden_fowler) {
    if (params.p != 1.5)
      throw std::domain_error(
          "integrate_direct: the singular-origin series start requires p = 3/2");
    auto [y, yp] = tf_series<LD>((LD)slope0, (LD)opts.x0);
    y0 = {y, yp};
  } else {
    if (params.p < 0)
      throw std::domain_error("integrate_direct: Lane-Emden form needs p >= 0");
    auto [th, thp] = le_series<LD>(params.p, (LD)opts.x0);
    y0 = {th, thp};
  }
  const auto run = run_system(opts.form, params.p, (LD)opts.x0, (LD)x_max, y0, tol,
                              opts.diverge_cap, opts.grid, opts.record_at);
  return to_table(run, params, opts.form == Form::emden_fowler ? slope0 : 0.0,
                  opts.form);
}

SolutionTable integrate_from(const EquationParams& params, const Sample& start,
                             double x_max, double tol, int grid, double diverge_cap) {
  if (start.x <= 0 || x_max <= start.x)
    throw std::domain_error("integrate_from: need 0 < start.x < x_max");
  if (tol <= 0) throw std::domain_error("integrate_from: tol must be positive");
  const auto run = run_system(Form::emden_fowler, params.p, (LD)start.x, (LD)x_max,
                              {(LD)start.y, (LD)start.yp}, tol, diverge_cap, grid);
  return to_table(run, params, start.yp, Form::emden_fowler);
}

SolutionTable integrate_from_at(const EquationParams& params, const Sample& start,
                                double x_max, double tol,
                                const std::vector<double>& record_at,
                                double diverge_cap) {
  if (start.x <= 0 || x_max <= start.x)
    throw std::domain_error("integrate_from_at: need 0 < start.x < x_max");
  if (tol <= 0) throw std::domain_error("integrate_from_at: tol must be positive");
  const auto run = run_system(Form::emden_fowler, params.p, (LD)start.x, (LD)x_max,
                              {(LD)start.y, (LD)start.yp}, tol, diverge_cap, 0,
                              record_at);
  return to_table(run, params, start.yp, Form::emden_fowler);
}

namespace {

enum class Fate { crossed, diverged, unresolved };

Fate classify(LD slope, const ShootOptions& o, double tol_step) {
  auto [y, yp] = tf_series<LD>(slope, (LD)o.x0);
  const auto run = run_system(Form::emden_fowler, 1.5, (LD)o.x0, (LD)o.x_max, {y, yp},
                              tol_step, o.diverge_cap, 0);
  switch (run.stop) {
    case StopReason::crossed_zero: return Fate::crossed;
    case StopReason::diverged: return Fate::diverged;
    default: return Fate::unresolved;
  }
}

// classification only has to outresolve the current bracket width, so early
// iterations can run at loose step tolerance
double tol_for_width(double w) {
  return std::clamp(w * 1e-5, 1e-17, 1e-10);
}

}  // namespace

ShootResult shoot_initial_slope_ex(double tol, const ShootOptions& opts) {
  if (tol <= 0) throw std::domain_error("shoot_initial_slope: tol must be positive");
  LD lo = (LD)opts.lo, hi = (LD)opts.hi;
  if (!(lo < hi)) throw std::domain_error("shoot_initial_slope: need lo < hi");

  if (classify(lo, opts, tol_for_width((double)(hi - lo))) != Fate::crossed)
    throw BracketError("shoot: lower endpoint does not produce a zero crossing");
  if (classify(hi, opts, tol_for_width((double)(hi - lo))) != Fate::diverged)
    throw BracketError("shoot: upper endpoint does not diverge");

  ShootResult r{0.0, 0.0, 0, false};
  while ((double)(hi - lo) > tol) {
    const LD mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const Fate f = classify(mid, opts, tol_for_width((double)(hi - lo)));
    ++r.iterations;
    if (f == Fate::crossed) {
      lo = mid;
    } else if (f == Fate::diverged) {
      hi = mid;
    } else {
      // deviation no longer reaches the cap or zero by x_max: the bracket is
      // below what this horizon can classify
      r.resolution_limited = true;
      break;
    }
  }
  r.slope = (double)((lo + hi) / 2);
  r.bracket_width = (double)(hi - lo);
  return r;
}

double shoot_initial_slope(double tol) {
  return shoot_initial_slope_ex(tol, ShootOptions{}).slope;
}

}  // namespace tfh
