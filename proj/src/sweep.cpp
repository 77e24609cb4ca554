#include "tfh/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "tfh/homology.hpp"
#include "tfh/odes.hpp"

namespace tfh {

namespace {

std::array<double, 2> chart_values(Chart chart, double x, double y, double yp,
                                   double p) {
  switch (chart) {
    case Chart::coppel: {
      const CoppelUV c = to_coppel(x, y, yp, p);
      return {c.u, c.v};
    }
    case Chart::milne: {
      const MilneUV m = to_milne(x, y, yp, p);
      return {m.u, m.v};
    }
    case Chart::dresner: {
      const DresnerTauS d = to_dresner(x, y, yp);
      return {d.tau, d.s};
    }
    case Chart::majorana: {
      const MajoranaTU m = to_majorana(x, y, yp);
      return {m.t, m.u};
    }
  }
  throw std::logic_error("chart_values: bad chart");
}

double rel_dev(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  double dev = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double scale = std::max({std::abs(a[i]), std::abs(b[i]), 1e-12});
    dev = std::max(dev, std::abs(a[i] - b[i]) / scale);
  }
  return dev;
}

}  // namespace

std::vector<InvarianceResult> invariance_sweep(const std::vector<double>& ps,
                                               const std::vector<double>& lambdas,
                                               const SweepOptions& opts) {
  std::vector<InvarianceResult> out;
  for (const double p : ps) {
    const EquationParams params = EquationParams::for_exponent(p);
    homology_exponent(p);  // reject p = 1 before doing any work

    const Sample start{opts.x0, opts.y0, opts.yp0};
    const SolutionTable base = integrate_from(params, start, opts.x_max, opts.tol);

    std::vector<Chart> charts{Chart::coppel, Chart::milne};
    if (p == 1.5) {
      charts.push_back(Chart::dresner);
      charts.push_back(Chart::majorana);
    }

    for (const double lambda : lambdas) {
      const HomologyMap map = HomologyMap::for_params(params, lambda);
      const Sample mapped_start = apply_homology(start, map);

      // record the mapped run exactly at lambda * (base abscissas): chart
      // values are then compared nodewise, with no interpolation error
      std::vector<double> mapped_xs;
      mapped_xs.reserve(base.samples.size());
      for (const Sample& s : base.samples) mapped_xs.push_back(lambda * s.x);
      const SolutionTable mapped = integrate_from_at(
          params, mapped_start, lambda * opts.x_max, opts.tol, mapped_xs);

      const std::size_t n = std::min(base.samples.size(), mapped.samples.size());
      for (const Chart chart : charts) {
        double max_dev = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const Sample js = apply_homology(base.samples[i], map);
          const Sample& ms = mapped.samples[i];
          const auto c1 = chart_values(chart, js.x, js.y, js.yp, p);
          const auto c2 = chart_values(chart, ms.x, ms.y, ms.yp, p);
          max_dev = std::max(max_dev, rel_dev(c1, c2));
        }
        out.push_back({p, lambda, chart, max_dev});
      }
    }
  }
  return out;
}

double product_identity_max_dev(double p, unsigned seed, int n) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dx(0.1, 3.0), dy(0.1, 3.0), dyp(-2.0, 2.0);
  double dev = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = dx(gen), y = dy(gen);
    double yp = dyp(gen);
    if (std::abs(yp) < 1e-2) yp = 1e-2;  // keep charts off their singular loci
    const CoppelUV c = to_coppel(x, y, yp, p);
    const double cop = std::pow(x, 3.0 - p) * std::pow(y, p - 1.0);
    dev = std::max(dev, std::abs(c.u * c.v - cop) / std::max(std::abs(cop), 1e-12));
    const double th = y / x;
    const double thp = (yp * x - y) / (x * x);
    if (thp != 0.0) {
      const MilneUV m = to_milne(x, y, yp, p);
      const double mil = x * x * std::pow(th, p - 1.0);
      dev = std::max(dev, std::abs(m.u * m.v - mil) / std::max(std::abs(mil), 1e-12));
    }
  }
  return dev;
}

}  // namespace tfh
