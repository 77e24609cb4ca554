// tfh: command-line front end for the homology-reduction solver library.
//
// Subcommands: solve, shoot, majorana, reconstruct, compare, invariance.
// Tables go to --output (default stdout) as CSV with a header row and
// 17-significant-digit values, or as a JSON summary with --format json.
// Exit codes: 0 success, 2 precondition violation, 3 numerical failure,
// 4 summary metric exceeded its bound (compare/invariance).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tfh/homology.hpp"
#include "tfh/numerics.hpp"
#include "tfh/odes.hpp"
#include "tfh/reconstruct.hpp"
#include "tfh/reduced.hpp"
#include "tfh/sweep.hpp"

namespace {

using nlohmann::json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

// Options shared by every table-producing subcommand.
struct Artifact {
  std::string format = "csv";
  std::string output;
};

void add_artifact(CLI::App* cmd, Artifact& a) {
  cmd->add_option("--format", a.format, "Artifact type: csv table or json summary")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", a.output, "Write the artifact to this file (default stdout)");
}

std::string render_json(const std::string& command, const json& config,
                        const json& metrics, const std::string& status) {
  const json doc = {
      {"command", command}, {"config", config}, {"metrics", metrics}, {"status", status}};
  return doc.dump(2) + "\n";
}

const auto positive = CLI::PositiveNumber;

// ---------------------------------------------------------------------------
// solve

struct SolveCfg {
  Artifact art;
  double p = 1.5;
  double slope = -1.5880710226;  // near-critical default
  double x_max = 50.0;
  double tol = 1e-12;
  int grid = 2001;
  bool lane_emden = false;
  double x0 = 1e-6;
  double cap = 1e6;
};

// Discretization-level ODE residual of the emitted table: on each interval
// whose width is at most 10% of the local x (so the stencil resolves the
// x^(-1/2) origin scale), compare the Hermite-cubic second derivative at the
// midpoint against the equation right-hand side, relative to max(1, |rhs|).
std::pair<double, int> table_residual(const tfh::SolutionTable& t, double p,
                                      tfh::Form form) {
  auto rhs = [&](double x, double y) {
    if (y < 0 && p != std::floor(p)) y = 0.0;
    const double yp_pow = p == 0.0 ? 1.0 : (y == 0.0 ? 0.0 : std::pow(y, p));
    if (form == tfh::Form::emden_fowler) return std::pow(x, 1.0 - p) * yp_pow;
    return yp_pow;  // theta^p; the -2 theta'/x transport term is added below
  };
  double worst = 0.0;
  int used = 0;
  for (std::size_t i = 0; i + 1 < t.samples.size(); ++i) {
    const auto& l = t.samples[i];
    const auto& r = t.samples[i + 1];
    const double h = r.x - l.x;
    const double xm = 0.5 * (l.x + r.x);
    if (!(h > 0.0) || h > 0.1 * xm) continue;
    const double ym = 0.5 * (l.y + r.y) + h * (l.yp - r.yp) / 8.0;
    const double ypm = (r.yp - l.yp) / h;
    double f = rhs(xm, ym);
    if (form == tfh::Form::lane_emden) {
      const double thpm = 1.5 * (r.y - l.y) / h - 0.25 * (l.yp + r.yp);
      f -= 2.0 * thpm / xm;
    }
    const double res = std::fabs(ypm - f) / std::max(1.0, std::fabs(f));
    if (res > worst) worst = res;
    ++used;
  }
  return {worst, used};
}

int cmd_solve(const SolveCfg& c) {
  const auto params = tfh::EquationParams::for_exponent(c.p);
  tfh::IntegrateOptions opts;
  opts.form = c.lane_emden ? tfh::Form::lane_emden : tfh::Form::emden_fowler;
  opts.x0 = c.x0;
  opts.diverge_cap = c.cap;
  opts.grid = c.grid;
  const auto table = tfh::integrate_direct(params, c.slope, c.x_max, c.tol, opts);

  if (c.art.format == "csv") {
    std::string csv = "x,y,yp\n";
    for (const auto& s : table.samples)
      csv += g17(s.x) + "," + g17(s.y) + "," + g17(s.yp) + "\n";
    emit(c.art.output, csv);
    return 0;
  }
  const auto [res_max, res_nodes] = table_residual(table, c.p, opts.form);
  const json config = {{"p", c.p},       {"slope", c.slope}, {"xmax", c.x_max},
                       {"tol", c.tol},   {"grid", c.grid},   {"lane_emden", c.lane_emden},
                       {"x0", c.x0},     {"cap", c.cap},     {"format", c.art.format}};
  const json metrics = {{"slope_used", table.slope0},
                        {"x_first", table.samples.front().x},
                        {"x_stop", table.x_stop},
                        {"stop_reason", tfh::stop_reason_name(table.stop)},
                        {"samples", table.samples.size()},
                        {"y_final", table.samples.back().y},
                        {"yp_final", table.samples.back().yp},
                        {"residual_max", res_max},
                        {"residual_intervals", res_nodes}};
  emit(c.art.output, render_json("solve", config, metrics, "ok"));
  return 0;
}

// ---------------------------------------------------------------------------
// shoot

struct ShootCfg {
  std::string output;
  double tol = 1e-8;
  double lo = -2.0;
  double hi = -1.0;
  double x_max = 600.0;
  double x0 = 1e-6;
  double cap = 1e6;
};

int cmd_shoot(const ShootCfg& c) {
  tfh::ShootOptions opts;
  opts.lo = c.lo;
  opts.hi = c.hi;
  opts.x_max = c.x_max;
  opts.x0 = c.x0;
  opts.diverge_cap = c.cap;
  const auto r = tfh::shoot_initial_slope_ex(c.tol, opts);

  const json config = {{"tol", c.tol}, {"lo", c.lo},   {"hi", c.hi},
                       {"xmax", c.x_max}, {"x0", c.x0}, {"cap", c.cap}};
  const json metrics = {{"B", r.slope},
                        {"bracket_width", r.bracket_width},
                        {"iterations", r.iterations},
                        {"resolution_limited", r.resolution_limited}};
  emit(c.output, render_json("shoot", config, metrics, "ok"));
  return 0;
}

// ---------------------------------------------------------------------------
// majorana

struct MajoranaCfg {
  Artifact art;
  int grid = 2001;
  double tol = 1e-10;
  double eps = 1e-6;
};

int cmd_majorana(const MajoranaCfg& c) {
  const auto red = tfh::solve_majorana(c.grid, c.tol, c.eps);

  if (c.art.format == "csv") {
    std::string csv = "t,u\n";
    for (const auto& s : red.samples) csv += g17(s[0]) + "," + g17(s[1]) + "\n";
    emit(c.art.output, csv);
    return 0;
  }
  const double u0 = red.samples.front()[1];
  const json config = {{"grid", c.grid}, {"tol", c.tol}, {"eps", c.eps},
                       {"format", c.art.format}};
  const json metrics = {{"u0", u0},
                        {"B", tfh::initial_slope_from_u0(u0)},
                        {"samples", red.samples.size()},
                        {"boundary", red.boundary}};
  emit(c.art.output, render_json("majorana", config, metrics, "ok"));
  return 0;
}

// ---------------------------------------------------------------------------
// reconstruct

struct ReconstructCfg {
  Artifact art;
  int grid = 2001;
  double tol = 1e-10;
  double eps = 1e-6;
  double quad_tol = 1e-11;
  double eps_rec = 1e-4;
};

int cmd_reconstruct(const ReconstructCfg& c) {
  const auto red = tfh::solve_majorana(c.grid, c.tol, c.eps);
  const auto par = tfh::reconstruct_majorana(red, c.quad_tol, c.eps_rec);

  if (c.art.format == "csv") {
    std::string csv = "t,x,y\n";
    for (const auto& s : par.samples)
      csv += g17(s[0]) + "," + g17(s[1]) + "," + g17(s[2]) + "\n";
    emit(c.art.output, csv);
    return 0;
  }
  const auto mc = tfh::solve_majorana_constants();
  double cube_max = 0.0, t_max_dev = 0.0;
  for (const auto& s : par.samples) {
    const double t = s[0], x = s[1], y = s[2];
    if (t <= 0.0) continue;
    const double t6 = t * t * t * t * t * t;
    cube_max = std::max(cube_max, std::fabs(x * x * x * y / (144.0 * t6) - 1.0));
    t_max_dev = std::max(
        t_max_dev, std::fabs(mc.a * std::sqrt(x) * std::pow(y, 1.0 / 6.0) - t));
  }
  const double u0 = red.samples.front()[1];
  const json config = {{"grid", c.grid},         {"tol", c.tol},
                       {"eps", c.eps},           {"quad_tol", c.quad_tol},
                       {"eps_rec", c.eps_rec},   {"format", c.art.format}};
  const json metrics = {{"samples", par.samples.size()},
                        {"u0", u0},
                        {"B", tfh::initial_slope_from_u0(u0)},
                        {"x_max", par.samples.back()[1]},
                        {"identity_cube_max_dev", cube_max},
                        {"identity_t_max_dev", t_max_dev}};
  emit(c.art.output, render_json("reconstruct", config, metrics, "ok"));
  return 0;
}

// ---------------------------------------------------------------------------
// compare

struct CompareCfg {
  Artifact art;
  double shoot_tol = 1e-13;
  double shoot_xmax = 600.0;
  double tol = 1e-15;
  int grid = 4001;
  double red_tol = 1e-13;
  double eps = 1e-6;
  double quad_tol = 1e-11;
  double eps_rec = 1e-4;
  double x_min = 0.01;
  double x_max = 50.0;
  int points = 1000;
  double bound = 1e-4;
};

int cmd_compare(const CompareCfg& c) {
  if (!(c.x_min < c.x_max))
    throw std::domain_error("compare: need xmin < xmax");

  tfh::ShootOptions so;
  so.x_max = c.shoot_xmax;
  const double B = tfh::shoot_initial_slope_ex(c.shoot_tol, so).slope;

  const auto red = tfh::solve_majorana(c.grid, c.red_tol, c.eps);
  const double B_reduced = tfh::initial_slope_from_u0(red.samples.front()[1]);
  const auto par = tfh::reconstruct_majorana(red, c.quad_tol, c.eps_rec);

  // log-log interpolant of the reconstructed curve (t=0 maps to x=0; skip it)
  std::vector<double> lx, ly;
  lx.reserve(par.samples.size());
  ly.reserve(par.samples.size());
  for (const auto& s : par.samples) {
    if (s[0] <= 0.0) continue;
    lx.push_back(std::log(s[1]));
    ly.push_back(std::log(s[2]));
  }
  const tfh::Pchip rec(std::move(lx), std::move(ly));
  if (std::log(c.x_min) < rec.x_front() || std::log(c.x_max) > rec.x_back())
    throw std::domain_error(
        "compare: requested x range extends beyond the reconstructed curve; "
        "lower xmax or eps-rec");

  tfh::IntegrateOptions opts;
  opts.record_at.resize(c.points);
  const double la = std::log(c.x_min), lb = std::log(c.x_max);
  for (int i = 0; i < c.points; ++i)
    opts.record_at[i] = std::exp(la + (lb - la) * i / (c.points - 1));
  opts.record_at.front() = c.x_min;
  opts.record_at.back() = c.x_max;
  const auto params = tfh::EquationParams::for_exponent(1.5);
  const auto direct = tfh::integrate_direct(params, B, c.x_max, c.tol, opts);

  std::string csv = "x,y_direct,y_reconstructed,rel_err\n";
  double max_rel = 0.0, max_rel_x = 0.0;
  for (const auto& s : direct.samples) {
    const double yr = std::exp(rec(std::log(s.x)));
    const double rel = std::fabs(yr - s.y) / std::fabs(s.y);
    if (rel > max_rel) { max_rel = rel; max_rel_x = s.x; }
    csv += g17(s.x) + "," + g17(s.y) + "," + g17(yr) + "," + g17(rel) + "\n";
  }

  const bool exceeded = max_rel > c.bound;
  const std::string status = exceeded ? "bound_exceeded" : "ok";
  if (c.art.format == "csv") {
    emit(c.art.output, csv);
  } else {
    const json config = {{"shoot_tol", c.shoot_tol}, {"shoot_xmax", c.shoot_xmax},
                         {"tol", c.tol},             {"grid", c.grid},
                         {"red_tol", c.red_tol},     {"eps", c.eps},
                         {"quad_tol", c.quad_tol},   {"eps_rec", c.eps_rec},
                         {"xmin", c.x_min},          {"xmax", c.x_max},
                         {"points", c.points},       {"bound", c.bound},
                         {"format", c.art.format}};
    const json metrics = {{"B_shoot", B},
                          {"B_reduced", B_reduced},
                          {"slope_gap", std::fabs(B - B_reduced)},
                          {"points", direct.samples.size()},
                          {"max_rel_err", max_rel},
                          {"max_rel_err_x", max_rel_x}};
    emit(c.art.output, render_json("compare", config, metrics, status));
  }
  if (exceeded) {
    std::cerr << "E4: compare: max_rel_err " << g17(max_rel) << " at x=" << g17(max_rel_x)
              << " exceeds bound " << g17(c.bound) << "\n";
    return 4;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// invariance

struct InvarianceCfg {
  Artifact art;
  std::vector<double> ps{1.2, 1.5, 2.0, 2.5, 3.0};
  std::vector<double> lambdas{0.5, 2.0};
  double tol = 1e-12;
  double x0 = 0.5;
  double y0 = 1.0;
  double yp0 = 0.1;
  double x_max = 1.2;
  double bound = 1e-6;
  unsigned seed = 42;
  int product_n = 500;
  double product_bound = 1e-9;
};

int cmd_invariance(const InvarianceCfg& c) {
  tfh::SweepOptions opts;
  opts.tol = c.tol;
  opts.x0 = c.x0;
  opts.y0 = c.y0;
  opts.yp0 = c.yp0;
  opts.x_max = c.x_max;
  const auto rows = tfh::invariance_sweep(c.ps, c.lambdas, opts);

  double max_dev = 0.0;
  std::string csv = "p,lambda,chart,max_dev\n";
  for (const auto& r : rows) {
    max_dev = std::max(max_dev, r.max_dev);
    csv += g17(r.p) + "," + g17(r.lambda) + "," + tfh::chart_name(r.chart) + "," +
           g17(r.max_dev) + "\n";
  }
  double product_dev = 0.0;
  for (double p : c.ps)
    product_dev =
        std::max(product_dev, tfh::product_identity_max_dev(p, c.seed, c.product_n));

  const bool exceeded = max_dev > c.bound || product_dev > c.product_bound;
  const std::string status = exceeded ? "bound_exceeded" : "ok";
  if (c.art.format == "csv") {
    emit(c.art.output, csv);
  } else {
    const json config = {{"p", c.ps},
                         {"lambda", c.lambdas},
                         {"tol", c.tol},
                         {"x0", c.x0},
                         {"y0", c.y0},
                         {"yp0", c.yp0},
                         {"xmax", c.x_max},
                         {"bound", c.bound},
                         {"seed", c.seed},
                         {"product_n", c.product_n},
                         {"product_bound", c.product_bound},
                         {"format", c.art.format}};
    const json metrics = {{"cases", rows.size()},
                          {"max_dev", max_dev},
                          {"product_identity_max_dev", product_dev}};
    emit(c.art.output, render_json("invariance", config, metrics, status));
  }
  if (exceeded) {
    std::cerr << "E4: invariance: max_dev " << g17(max_dev) << " / product_dev "
              << g17(product_dev) << " exceeds bound " << g17(c.bound) << " / "
              << g17(c.product_bound) << "\n";
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Homology-reduction solver for the Thomas-Fermi / Emden-Fowler family"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Read options from a flat key=value file (keys: <command>.<option>)");
  app.allow_config_extras(false);

  SolveCfg solve_cfg;
  auto* solve = app.add_subcommand(
      "solve", "Integrate y'' = x^(1-p) y^p directly and emit an (x,y,yp) table");
  add_artifact(solve, solve_cfg.art);
  solve->configurable()->fallthrough();
  solve->add_option("--p", solve_cfg.p, "Equation exponent")->capture_default_str();
  solve->add_option("--slope", solve_cfg.slope, "Initial slope y'(0) (ignored with --lane-emden)")
      ->capture_default_str();
  solve->add_option("--xmax", solve_cfg.x_max, "Integration endpoint")
      ->check(positive)->capture_default_str();
  solve->add_option("--tol", solve_cfg.tol, "Step tolerance")->check(positive)
      ->capture_default_str();
  solve->add_option("--grid", solve_cfg.grid, "Uniform output grid size")
      ->check(CLI::Range(2, 100000000))->capture_default_str();
  solve->add_flag("--lane-emden", solve_cfg.lane_emden,
                  "Solve theta'' + (2/x) theta' = theta^p instead (any p >= 0)");
  solve->add_option("--x0", solve_cfg.x0, "Series-start abscissa")->check(positive)
      ->capture_default_str();
  solve->add_option("--cap", solve_cfg.cap, "Divergence cap")->check(positive)
      ->capture_default_str();

  ShootCfg shoot_cfg;
  auto* shoot = app.add_subcommand(
      "shoot", "Bisect the critical initial slope of the p=3/2 equation (JSON summary)");
  shoot->configurable()->fallthrough();
  shoot->add_option("--output", shoot_cfg.output, "Write the summary to this file");
  shoot->add_option("--tol", shoot_cfg.tol, "Bracket-width stop tolerance")
      ->check(positive)->capture_default_str();
  shoot->add_option("--lo", shoot_cfg.lo, "Lower bracket endpoint")->capture_default_str();
  shoot->add_option("--hi", shoot_cfg.hi, "Upper bracket endpoint")->capture_default_str();
  shoot->add_option("--xmax", shoot_cfg.x_max, "Classification horizon")
      ->check(positive)->capture_default_str();
  shoot->add_option("--x0", shoot_cfg.x0, "Series-start abscissa")->check(positive)
      ->capture_default_str();
  shoot->add_option("--cap", shoot_cfg.cap, "Divergence cap")->check(positive)
      ->capture_default_str();

  MajoranaCfg maj_cfg;
  auto* maj = app.add_subcommand(
      "majorana", "Solve the reduced first-order equation on t in [0,1]; emit (t,u)");
  add_artifact(maj, maj_cfg.art);
  maj->configurable()->fallthrough();
  maj->add_option("--grid", maj_cfg.grid, "Uniform output grid size")
      ->check(CLI::Range(2, 100000000))->capture_default_str();
  maj->add_option("--tol", maj_cfg.tol, "Step tolerance")->check(positive)
      ->capture_default_str();
  maj->add_option("--eps", maj_cfg.eps, "Series-start offset from t=1")
      ->check(positive)->capture_default_str();

  ReconstructCfg rec_cfg;
  auto* rec = app.add_subcommand(
      "reconstruct", "Rebuild the original solution parametrically; emit (t,x,y)");
  add_artifact(rec, rec_cfg.art);
  rec->configurable()->fallthrough();
  rec->add_option("--grid", rec_cfg.grid, "Reduced-equation grid size")
      ->check(CLI::Range(2, 100000000))->capture_default_str();
  rec->add_option("--tol", rec_cfg.tol, "Reduced-equation step tolerance")
      ->check(positive)->capture_default_str();
  rec->add_option("--eps", rec_cfg.eps, "Series-start offset from t=1")
      ->check(positive)->capture_default_str();
  rec->add_option("--quad-tol", rec_cfg.quad_tol, "Quadrature tolerance per interval")
      ->check(positive)->capture_default_str();
  rec->add_option("--eps-rec", rec_cfg.eps_rec,
                  "Reconstruction stops at t = 1 - eps_rec (y diverges at t=1)")
      ->check(positive)->capture_default_str();

  CompareCfg cmp_cfg;
  auto* cmp = app.add_subcommand(
      "compare", "Reconstructed curve vs direct integration at the shot slope");
  add_artifact(cmp, cmp_cfg.art);
  cmp->configurable()->fallthrough();
  cmp->add_option("--shoot-tol", cmp_cfg.shoot_tol, "Shooting bracket tolerance")
      ->check(positive)->capture_default_str();
  cmp->add_option("--shoot-xmax", cmp_cfg.shoot_xmax, "Shooting classification horizon")
      ->check(positive)->capture_default_str();
  cmp->add_option("--tol", cmp_cfg.tol, "Direct-run step tolerance")->check(positive)
      ->capture_default_str();
  cmp->add_option("--grid", cmp_cfg.grid, "Reduced-equation grid size")
      ->check(CLI::Range(2, 100000000))->capture_default_str();
  cmp->add_option("--red-tol", cmp_cfg.red_tol, "Reduced-equation step tolerance")
      ->check(positive)->capture_default_str();
  cmp->add_option("--eps", cmp_cfg.eps, "Series-start offset from t=1")
      ->check(positive)->capture_default_str();
  cmp->add_option("--quad-tol", cmp_cfg.quad_tol, "Quadrature tolerance per interval")
      ->check(positive)->capture_default_str();
  cmp->add_option("--eps-rec", cmp_cfg.eps_rec, "Reconstruction cutoff offset")
      ->check(positive)->capture_default_str();
  cmp->add_option("--xmin", cmp_cfg.x_min, "Comparison range start")->check(positive)
      ->capture_default_str();
  cmp->add_option("--xmax", cmp_cfg.x_max, "Comparison range end")->check(positive)
      ->capture_default_str();
  cmp->add_option("--points", cmp_cfg.points, "Log-spaced comparison points")
      ->check(CLI::Range(2, 10000000))->capture_default_str();
  cmp->add_option("--bound", cmp_cfg.bound, "Exit 4 if max_rel_err exceeds this")
      ->check(positive)->capture_default_str();

  InvarianceCfg inv_cfg;
  auto* inv = app.add_subcommand(
      "invariance", "Two-run homology-invariance sweep over (p, lambda, chart)");
  add_artifact(inv, inv_cfg.art);
  inv->configurable()->fallthrough();
  inv->add_option("--p", inv_cfg.ps, "Equation exponents to sweep")
      ->expected(-1)->capture_default_str();
  inv->add_option("--lambda", inv_cfg.lambdas, "Scaling factors to sweep")
      ->expected(-1)->capture_default_str();
  inv->add_option("--tol", inv_cfg.tol, "Step tolerance for both runs")
      ->check(positive)->capture_default_str();
  inv->add_option("--x0", inv_cfg.x0, "Base scenario start abscissa")->check(positive)
      ->capture_default_str();
  inv->add_option("--y0", inv_cfg.y0, "Base scenario y(x0)")->capture_default_str();
  inv->add_option("--yp0", inv_cfg.yp0, "Base scenario y'(x0)")->capture_default_str();
  inv->add_option("--xmax", inv_cfg.x_max, "Base scenario endpoint")->check(positive)
      ->capture_default_str();
  inv->add_option("--bound", inv_cfg.bound, "Exit 4 if any chart max_dev exceeds this")
      ->check(positive)->capture_default_str();
  inv->add_option("--seed", inv_cfg.seed, "Seed for the random-jet product-identity check")
      ->capture_default_str();
  inv->add_option("--product-n", inv_cfg.product_n, "Random jets per exponent")
      ->check(CLI::Range(1, 100000000))->capture_default_str();
  inv->add_option("--product-bound", inv_cfg.product_bound,
                  "Exit 4 if the product-identity deviation exceeds this")
      ->check(positive)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "E2: " << e.get_name() << ": " << one_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_cfg);
    if (shoot->parsed()) return cmd_shoot(shoot_cfg);
    if (maj->parsed()) return cmd_majorana(maj_cfg);
    if (rec->parsed()) return cmd_reconstruct(rec_cfg);
    if (cmp->parsed()) return cmd_compare(cmp_cfg);
    if (inv->parsed()) return cmd_invariance(inv_cfg);
  } catch (const tfh::SingularityError& e) {
    std::cerr << "E3: " << one_line(e.what()) << "\n";
    return 3;
  } catch (const tfh::BracketError& e) {
    std::cerr << "E3: " << one_line(e.what()) << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "E2: " << one_line(e.what()) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "E2: " << one_line(e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "E3: " << one_line(e.what()) << "\n";
    return 3;
  }
  return 2;
}
