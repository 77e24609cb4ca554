#pragma once

#include <vector>

#include "tfh/types.hpp"

namespace tfh {

struct InvarianceResult {
  double p;
  double lambda;
  Chart chart;
  double max_dev;
};

struct SweepOptions {
  double tol = 1e-12;  // step tolerance for both runs
  // base scenario y(x0) = y0, y'(x0) = yp0 integrated to x_max; chosen so no
  // chart denominator (y', theta') vanishes for p in [1.2, 3]
  double x0 = 0.5;
  double y0 = 1.0;
  double yp0 = 0.1;
  double x_max = 1.2;
};

// Two-run chart-invariance check: integrate a base solution, push its initial
// jet through apply_homology, integrate the mapped solution independently,
// then compare chart values of base samples against the mapped run
// interpolated (monotone cubic) at lambda*x.  Coppel and Milne run for every
// p; Dresner and Majorana (TF-specific charts) additionally at p = 3/2.
// Throws the q-singularity domain error for p = 1.
std::vector<InvarianceResult> invariance_sweep(const std::vector<double>& ps,
                                               const std::vector<double>& lambdas,
                                               const SweepOptions& opts = {});

// Max relative deviation of the algebraic product identities
// (Coppel u*v = x^(3-p) y^(p-1), Milne u*v = x^2 theta^(p-1)) over n random
// jets; deterministic for a given seed.
double product_identity_max_dev(double p, unsigned seed, int n);

}  // namespace tfh
