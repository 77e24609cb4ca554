#pragma once

#include <array>
#include <vector>

#include "tfh/reduced.hpp"
#include "tfh/types.hpp"

namespace tfh {

// W(t) = -6 t u / (1 - t^2 u), the logarithmic-derivative kernel of the
// parametric reconstruction.
double w_of_t(double t, double u);

// Parametric solution of the p=3/2 equation: y(t) = exp(F(t)),
// x(t) = 144^(1/3) t^2 exp(-F(t)/3) with F(t) the cumulative integral of W.
struct ParametricSolution {
  std::vector<std::array<double, 3>> samples;  // (t, x, y)
  double quadrature_tol = 0.0;
};

// Quadrature over the reduced solution's own t-grid; the shared cumulative
// integral makes x^3 y = 144 t^6 and 144^(-1/6) x^(1/2) y^(1/6) = t exact up
// to rounding.  F diverges as t -> 1, so reconstruction stops at
// t_max = 1 - eps_rec.
ParametricSolution reconstruct_majorana(const ReducedSolution& reduced, double quad_tol,
                                        double eps_rec = 1e-4);

// Dresner-chart route: substitute tau = 144 t^6 (which exactly regularizes
// the sigma^(-2/3) endpoint singularity of the raw quadrature) and reuse the
// Majorana-parameter machinery.  Requires data from tau = 0.
std::vector<std::array<double, 3>> reconstruct_dresner(const ReducedSolution& reduced,
                                                       double quad_tol,
                                                       double eps_rec = 1e-4);

// B = -(3/16)^(1/3) u0: inversion of the Majorana u-definition at x -> 0,
// where y = 1 and y' = B.
double initial_slope_from_u0(double u0);

}  // namespace tfh
