#pragma once

#include <functional>
#include <vector>

#include "tfh/types.hpp"

namespace tfh {

// Monotone piecewise-cubic Hermite interpolant (Fritsch-Carlson slopes).
// Preserves monotonicity of the data; evaluation outside the node range
// extrapolates with the boundary cubic.
class Pchip {
 public:
  Pchip() = default;
  // xs strictly increasing, same length as ys, at least 2 nodes
  Pchip(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;
  double derivative(double x) const;

  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }

 private:
  std::size_t interval(double x) const;
  std::vector<double> x_, y_, d_;
};

// Adaptive Simpson quadrature with Richardson correction; |error| <= tol on
// well-behaved integrands.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

// Interpolants over a solution table's y and y' columns.
Pchip table_interpolant(const SolutionTable& table);
Pchip table_derivative_interpolant(const SolutionTable& table);

}  // namespace tfh
