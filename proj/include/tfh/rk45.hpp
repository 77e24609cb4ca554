#pragma once

// Adaptive Dormand-Prince 5(4) integrator with 4th-order dense output and
// event stopping.  Templated on the floating type so the shooting pipeline
// can run in long double while everything downstream stays in double.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace tfh {

template <class Real, std::size_t N>
using State = std::array<Real, N>;

// stalled: the controller drove the step size to zero (typically an
// approach to a singular locus that no event function guards)
enum class OdeOutcome { reached_end, event_stop, stalled };

template <class Real, std::size_t N>
struct OdeOptions {
  Real rtol = Real(1e-10);
  Real atol = Real(1e-12);
  Real h_init = Real(0);  // 0: choose automatically
  Real h_max = Real(0);   // 0: span of the interval
  std::size_t max_steps = 4'000'000;
  // If nonempty, record exactly these abscissas (sorted along the direction
  // of integration, within [x0, x1]); otherwise record every accepted step.
  std::vector<Real> grid;
};

// Integration stops when an event function changes sign relative to its value
// at the start; the crossing is located by bisection on the dense output.
template <class Real, std::size_t N>
using EventFn = std::function<Real(Real, const State<Real, N>&)>;

template <class Real, std::size_t N>
struct OdeResult {
  std::vector<Real> xs;
  std::vector<State<Real, N>> ys;
  OdeOutcome outcome = OdeOutcome::reached_end;
  int event_index = -1;
  Real x_final = Real(0);
  State<Real, N> y_final{};
  std::size_t n_accepted = 0;
  std::size_t n_rejected = 0;
};

namespace detail {

// Dense-output polynomial for one accepted step, evaluated via
// y(x0 + th*h) = r0 + th*(r1 + (1-th)*(r2 + th*(r3 + (1-th)*r4))).
template <class Real, std::size_t N>
struct DenseStep {
  Real x0, h;
  std::array<State<Real, N>, 5> r;

  State<Real, N> eval(Real x) const {
    const Real th = (x - x0) / h;
    const Real th1 = Real(1) - th;
    State<Real, N> y;
    for (std::size_t i = 0; i < N; ++i)
      y[i] = r[0][i] + th * (r[1][i] + th1 * (r[2][i] + th * (r[3][i] + th1 * r[4][i])));
    return y;
  }
};

template <class Real, std::size_t N>
bool finite(const State<Real, N>& y) {
  for (std::size_t i = 0; i < N; ++i)
    if (!std::isfinite(static_cast<double>(y[i]))) return false;
  return true;
}

}  // namespace detail

template <class Real, std::size_t N, class RHS>
OdeResult<Real, N> integrate_ode(RHS&& f, Real x0, Real x1, State<Real, N> y0,
                                 const OdeOptions<Real, N>& opt = {},
                                 const std::vector<EventFn<Real, N>>& events = {}) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  static constexpr double d1 = -12715105075.0 / 11282082432.0,
                          d3 = 87487479700.0 / 32700410799.0,
                          d4 = -10690763975.0 / 1880347072.0,
                          d5 = 701980252875.0 / 199316789632.0,
                          d6 = -1453857185.0 / 822651844.0,
                          d7 = 69997945.0 / 29380423.0;

  if (x1 == x0) throw std::invalid_argument("integrate_ode: empty interval");
  const Real dir = x1 > x0 ? Real(1) : Real(-1);
  const Real span = std::abs(x1 - x0);
  const Real hmax = opt.h_max > Real(0) ? opt.h_max : span;

  OdeResult<Real, N> res;
  Real x = x0;
  State<Real, N> y = y0;
  State<Real, N> k1;
  f(x, y, k1);
  if (!detail::finite(k1))
    throw std::invalid_argument("integrate_ode: RHS not finite at the start");

  // initial event signs; an event starting at exactly zero is armed once it
  // leaves zero
  std::vector<int> ev_sign(events.size(), 0);
  for (std::size_t j = 0; j < events.size(); ++j) {
    const Real g = events[j](x, y);
    ev_sign[j] = g > Real(0) ? 1 : (g < Real(0) ? -1 : 0);
  }

  // initial step: conservative scale-based guess, refined by the controller
  Real h;
  if (opt.h_init > Real(0)) {
    h = std::min(opt.h_init, hmax);
  } else {
    Real sc = Real(0), sf = Real(0);
    for (std::size_t i = 0; i < N; ++i) {
      sc = std::max(sc, std::abs(y[i]));
      sf = std::max(sf, std::abs(k1[i]));
    }
    Real guess = sf > Real(0) ? Real(0.01) * (sc + opt.atol) / sf : span / Real(100);
    h = std::clamp(guess, span * Real(1e-12), std::min(hmax, span / Real(10)));
  }

  const bool use_grid = !opt.grid.empty();
  std::size_t gi = 0;
  auto record = [&](Real xr, const State<Real, N>& yr) {
    res.xs.push_back(xr);
    res.ys.push_back(yr);
  };
  if (!use_grid) record(x, y);
  while (use_grid && gi < opt.grid.size() && (opt.grid[gi] - x) * dir <= Real(0)) {
    record(opt.grid[gi], y);
    ++gi;
  }

  State<Real, N> k2, k3, k4, k5, k6, k7, yt, y5;

  for (std::size_t step = 0; step < opt.max_steps; ++step) {
    if ((x - x1) * dir >= Real(0)) {
      res.outcome = OdeOutcome::reached_end;
      res.x_final = x;
      res.y_final = y;
      return res;
    }
    if (std::abs(h) > hmax) h = hmax;
    // land exactly on x1
    if ((x + dir * std::abs(h) - x1) * dir > Real(0)) h = std::abs(x1 - x);
    const Real hs = dir * std::abs(h);

    if (std::abs(hs) <= span * std::numeric_limits<Real>::epsilon() * Real(64)) {
      res.outcome = OdeOutcome::stalled;
      res.x_final = x;
      res.y_final = y;
      return res;
    }

    auto stage = [&](Real cf, const State<Real, N>& yin, State<Real, N>& kout) {
      f(x + cf * hs, yin, kout);
    };

    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + hs * Real(a21) * k1[i];
    stage(Real(c2), yt, k2);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + hs * (Real(a31) * k1[i] + Real(a32) * k2[i]);
    stage(Real(c3), yt, k3);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + hs * (Real(a41) * k1[i] + Real(a42) * k2[i] + Real(a43) * k3[i]);
    stage(Real(c4), yt, k4);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + hs * (Real(a51) * k1[i] + Real(a52) * k2[i] + Real(a53) * k3[i] +
                           Real(a54) * k4[i]);
    stage(Real(c5), yt, k5);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + hs * (Real(a61) * k1[i] + Real(a62) * k2[i] + Real(a63) * k3[i] +
                           Real(a64) * k4[i] + Real(a65) * k5[i]);
    stage(Real(1), yt, k6);
    for (std::size_t i = 0; i < N; ++i)
      y5[i] = y[i] + hs * (Real(b1) * k1[i] + Real(b3) * k3[i] + Real(b4) * k4[i] +
                           Real(b5) * k5[i] + Real(b6) * k6[i]);
    stage(Real(1), y5, k7);  // FSAL

    Real err = Real(0);
    bool ok = detail::finite(y5) && detail::finite(k7);
    if (ok) {
      for (std::size_t i = 0; i < N; ++i) {
        const Real ei = hs * (Real(e1) * k1[i] + Real(e3) * k3[i] + Real(e4) * k4[i] +
                              Real(e5) * k5[i] + Real(e6) * k6[i] + Real(e7) * k7[i]);
        const Real sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
        err += (ei / sc) * (ei / sc);
      }
      err = std::sqrt(err / Real(N));
    }

    if (!ok || err > Real(1)) {
      const Real fac = ok ? std::max(Real(0.2), Real(0.9) * std::pow(err, Real(-0.2)))
                          : Real(0.25);
      h = std::abs(hs) * fac;
      ++res.n_rejected;
      continue;
    }

    // accepted: build dense output for this step
    detail::DenseStep<Real, N> ds;
    ds.x0 = x;
    ds.h = hs;
    for (std::size_t i = 0; i < N; ++i) {
      const Real dy = y5[i] - y[i];
      const Real bspl = hs * k1[i] - dy;
      ds.r[0][i] = y[i];
      ds.r[1][i] = dy;
      ds.r[2][i] = bspl;
      ds.r[3][i] = dy - hs * k7[i] - bspl;
      ds.r[4][i] = hs * (Real(d1) * k1[i] + Real(d3) * k3[i] + Real(d4) * k4[i] +
                         Real(d5) * k5[i] + Real(d6) * k6[i] + Real(d7) * k7[i]);
    }

    const Real x_new = x + hs;

    // events: sign change over the step, bisected on the dense output
    int hit = -1;
    Real x_ev = x_new;
    for (std::size_t j = 0; j < events.size(); ++j) {
      const Real g = events[j](x_new, y5);
      const int s = g > Real(0) ? 1 : (g < Real(0) ? -1 : 0);
      if (ev_sign[j] == 0) {
        ev_sign[j] = s;
        continue;
      }
      if (s != 0 && s != ev_sign[j]) {
        Real lo = x, hi = x_new;
        for (int it = 0; it < 200 && std::abs(hi - lo) >
                                         std::abs(hs) * std::numeric_limits<Real>::epsilon() * Real(8);
             ++it) {
          const Real mid = (lo + hi) / Real(2);
          const State<Real, N> ym = ds.eval(mid);
          const Real gm = events[j](mid, ym);
          const int sm = gm > Real(0) ? 1 : (gm < Real(0) ? -1 : 0);
          if (sm == ev_sign[j] || sm == 0)
            lo = mid;
          else
            hi = mid;
        }
        if (hit < 0 || (hi - x_ev) * dir < Real(0)) {
          x_ev = hi;
          hit = static_cast<int>(j);
        }
      }
    }

    const Real x_limit = hit >= 0 ? x_ev : x_new;

    if (use_grid) {
      while (gi < opt.grid.size() && (opt.grid[gi] - x_limit) * dir <= Real(0)) {
        record(opt.grid[gi], ds.eval(opt.grid[gi]));
        ++gi;
      }
    } else {
      if (hit < 0)
        record(x_new, y5);
      else
        record(x_ev, ds.eval(x_ev));
    }

    if (hit >= 0) {
      res.outcome = OdeOutcome::event_stop;
      res.event_index = hit;
      res.x_final = x_ev;
      res.y_final = ds.eval(x_ev);
      return res;
    }

    x = x_new;
    y = y5;
    k1 = k7;
    ++res.n_accepted;
    const Real fac = std::clamp(Real(0.9) * std::pow(std::max(err, Real(1e-30)), Real(-0.2)),
                                Real(0.2), Real(5));
    h = std::abs(hs) * fac;
  }
  throw std::runtime_error("integrate_ode: step limit exceeded");
}

}  // namespace tfh
