#include "tfh/reconstruct.hpp"

#include <cmath>
#include <stdexcept>

#include "tfh/numerics.hpp"

namespace tfh {

double w_of_t(double t, double u) {
  const double den = 1.0 - t * t * u;
  if (den == 0) throw SingularityError("w_of_t: 1-t^2 u = 0", t);
  return -6.0 * t * u / den;
}

namespace {

// shared cumulative quadrature: nodes (t_i, u_i) with t_0 = 0, t increasing;
// returns (t_i, x_i, y_i) built from one integral F so the chart identities
// cancel exactly
std::vector<std::array<double, 3>> reconstruct_core(const std::vector<double>& ts,
                                                    const std::vector<double>& us,
                                                    double quad_tol) {
  const std::size_t n = ts.size();
  std::vector<double> ws(n);
  for (std::size_t i = 0; i < n; ++i) ws[i] = w_of_t(ts[i], us[i]);
  const Pchip w(ts, ws);

  const double span = ts.back() - ts.front();
  const double c = std::cbrt(144.0);
  std::vector<std::array<double, 3>> out(n);
  double F = 0.0;
  out[0] = {ts[0], c * ts[0] * ts[0], 1.0};
  for (std::size_t i = 1; i < n; ++i) {
    const double h = ts[i] - ts[i - 1];
    F += adaptive_simpson([&w](double s) { return w(s); }, ts[i - 1], ts[i],
                          quad_tol * h / span);
    const double e = std::exp(F);
    out[i] = {ts[i], c * ts[i] * ts[i] / std::cbrt(e), e};
  }
  return out;
}

}  // namespace

ParametricSolution reconstruct_majorana(const ReducedSolution& reduced, double quad_tol,
                                        double eps_rec) {
  if (reduced.chart != Chart::majorana)
    throw std::invalid_argument("reconstruct_majorana: input must be Majorana chart");
  if (quad_tol <= 0)
    throw std::domain_error("reconstruct_majorana: quad_tol must be positive");
  if (!(eps_rec > 0 && eps_rec < 1))
    throw std::domain_error("reconstruct_majorana: need 0 < eps_rec < 1");
  const auto& s = reduced.samples;
  if (s.size() < 4 || s.front()[0] != 0.0 || s.back()[0] != 1.0)
    throw std::invalid_argument("reconstruct_majorana: reduced data must cover [0,1]");

  const double t_max = 1.0 - eps_rec;
  std::vector<double> ts, us, all_t(s.size()), all_u(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    all_t[i] = s[i][0];
    all_u[i] = s[i][1];
    if (s[i][0] < t_max) {
      ts.push_back(s[i][0]);
      us.push_back(s[i][1]);
    }
  }
  const Pchip u_interp(std::move(all_t), std::move(all_u));
  ts.push_back(t_max);
  us.push_back(u_interp(t_max));

  ParametricSolution out;
  out.quadrature_tol = quad_tol;
  out.samples = reconstruct_core(ts, us, quad_tol);
  return out;
}

std::vector<std::array<double, 3>> reconstruct_dresner(const ReducedSolution& reduced,
                                                       double quad_tol, double eps_rec) {
  if (reduced.chart != Chart::dresner)
    throw std::invalid_argument("reconstruct_dresner: input must be Dresner chart");
  if (quad_tol <= 0)
    throw std::domain_error("reconstruct_dresner: quad_tol must be positive");
  const auto& s = reduced.samples;
  if (s.size() < 4)
    throw std::invalid_argument("reconstruct_dresner: need at least 4 samples");
  if (s.front()[0] != 0.0)
    throw std::domain_error(
        "reconstruct_dresner: data must extend to tau = 0 (endpoint quadrature)");

  const DresnerConstants dc = solve_dresner_constants();
  const double k = std::pow(dc.A, 4.0 / 3.0) / dc.B;  // u = k s / tau^(4/3)
  const double t_max = 1.0 - eps_rec;

  std::vector<double> ts, us, taus, all_t, all_u;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double tau = s[i][0];
    if (tau <= 0) throw std::domain_error("reconstruct_dresner: tau must increase from 0");
    const double t = std::pow(tau / dc.A, 1.0 / 6.0);
    const double u = k * s[i][1] / std::pow(tau, 4.0 / 3.0);
    all_t.push_back(t);
    all_u.push_back(u);
    if (t >= t_max) continue;
    ts.push_back(t);
    us.push_back(u);
    taus.push_back(tau);
  }
  if (ts.size() < 3)
    throw std::invalid_argument("reconstruct_dresner: too few usable samples");

  // close at the same cutoff node the t-parameter route uses
  if (all_t.back() > t_max) {
    const Pchip u_interp(std::move(all_t), std::move(all_u));
    ts.push_back(t_max);
    us.push_back(u_interp(t_max));
    taus.push_back(dc.A * std::pow(t_max, 6.0));
  }

  // u at the tau = 0 node is 0/0 in the chart algebra; extrapolate it
  // quadratically (W(t) vanishes linearly at t = 0, so this node is benign)
  const double t1 = ts[0], t2 = ts[1], t3 = ts[2];
  const double u0 = us[0] * t2 * t3 / ((t1 - t2) * (t1 - t3)) +
                    us[1] * t1 * t3 / ((t2 - t1) * (t2 - t3)) +
                    us[2] * t1 * t2 / ((t3 - t1) * (t3 - t2));
  ts.insert(ts.begin(), 0.0);
  us.insert(us.begin(), u0);
  taus.insert(taus.begin(), 0.0);

  auto core = reconstruct_core(ts, us, quad_tol);
  std::vector<std::array<double, 3>> out(core.size());
  for (std::size_t i = 0; i < core.size(); ++i)
    out[i] = {taus[i], core[i][1], core[i][2]};
  return out;
}

double initial_slope_from_u0(double u0) { return -std::cbrt(3.0 / 16.0) * u0; }

}  // namespace tfh
