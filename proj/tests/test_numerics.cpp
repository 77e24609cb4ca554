#include <cmath>
#include <vector>

#include "doctest.h"
#include "tfh/numerics.hpp"
#include "tfh/rk45.hpp"

namespace {

using tfh::Pchip;

TEST_CASE("pchip reproduces linear data exactly") {
  Pchip f({0.0, 0.5, 2.0, 3.0}, {1.0, 2.0, 5.0, 7.0});
  CHECK(f(0.25) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(f(2.5) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(f.derivative(1.0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pchip interpolates nodes and stays monotone") {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 20; ++i) {
    xs.push_back(0.1 * i);
    ys.push_back(std::tanh(xs.back() - 1.0));
  }
  Pchip f(xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(f(xs[i]) == ys[i]);
  double prev = f(0.0);
  for (double x = 0.005; x <= 2.0; x += 0.005) {
    const double cur = f(x);
    CHECK(cur >= prev - 1e-15);
    prev = cur;
  }
}

TEST_CASE("pchip accuracy on a smooth function") {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 100; ++i) {
    xs.push_back(i / 100.0 * 3.0);
    ys.push_back(std::exp(-xs.back()));
  }
  Pchip f(xs, ys);
  double worst = 0.0;
  for (double x = 0.0; x <= 3.0; x += 0.0013)
    worst = std::max(worst, std::abs(f(x) - std::exp(-x)));
  CHECK(worst < 2e-6);
}

TEST_CASE("pchip rejects bad input") {
  CHECK_THROWS_AS(Pchip({1.0}, {2.0}), std::invalid_argument);
  CHECK_THROWS_AS(Pchip({0.0, 0.0, 1.0}, {1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("adaptive simpson on known integrals") {
  const double i1 = tfh::adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0,
                                          1.0, 1e-12);
  CHECK(i1 == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  const double i2 = tfh::adaptive_simpson(
      [](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, 1e-13);
  CHECK(i2 == doctest::Approx(std::atan(1.0)).epsilon(1e-12));
  CHECK(tfh::adaptive_simpson([](double x) { return x; }, 2.0, 2.0, 1e-10) == 0.0);
}

using S2 = tfh::State<double, 2>;

TEST_CASE("rk45 integrates the harmonic oscillator") {
  auto rhs = [](double, const S2& y, S2& d) {
    d[0] = y[1];
    d[1] = -y[0];
  };
  tfh::OdeOptions<double, 2> opt;
  opt.rtol = 1e-12;
  opt.atol = 1e-14;
  const auto r = tfh::integrate_ode(rhs, 0.0, 10.0, S2{1.0, 0.0}, opt);
  REQUIRE(r.outcome == tfh::OdeOutcome::reached_end);
  CHECK(r.y_final[0] == doctest::Approx(std::cos(10.0)).epsilon(1e-10));
  CHECK(r.y_final[1] == doctest::Approx(-std::sin(10.0)).epsilon(1e-10));
}

TEST_CASE("rk45 dense output hits grid points accurately") {
  auto rhs = [](double x, const S2& y, S2& d) {
    d[0] = y[1];
    d[1] = -y[0] + std::sin(2.0 * x);
  };
  tfh::OdeOptions<double, 2> opt;
  opt.rtol = 1e-11;
  opt.atol = 1e-13;
  for (int i = 0; i < 41; ++i) opt.grid.push_back(i * 0.2);
  const auto r = tfh::integrate_ode(rhs, 0.0, 8.0, S2{0.0, 1.0}, opt);
  REQUIRE(r.xs.size() == 41);
  // closed form for y'' = -y + sin(2x), y(0)=0, y'(0)=1:
  // y = (5/3) sin(x) - (1/3) sin(2x)
  for (std::size_t i = 0; i < r.xs.size(); ++i) {
    const double x = r.xs[i];
    const double exact = 5.0 / 3.0 * std::sin(x) - std::sin(2.0 * x) / 3.0;
    CHECK(r.ys[i][0] == doctest::Approx(exact).epsilon(5e-10));
  }
}

TEST_CASE("rk45 integrates backwards") {
  auto rhs = [](double, const S2& y, S2& d) {
    d[0] = y[0];
    d[1] = 0.0;
  };
  tfh::OdeOptions<double, 2> opt;
  opt.rtol = 1e-12;
  const auto r = tfh::integrate_ode(rhs, 1.0, 0.0, S2{std::exp(1.0), 0.0}, opt);
  REQUIRE(r.outcome == tfh::OdeOutcome::reached_end);
  CHECK(r.y_final[0] == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("rk45 event stop locates the crossing") {
  auto rhs = [](double, const S2& y, S2& d) {
    d[0] = -y[0];
    d[1] = 0.0;
  };
  tfh::OdeOptions<double, 2> opt;
  opt.rtol = 1e-12;
  opt.atol = 1e-14;
  std::vector<tfh::EventFn<double, 2>> events{
      [](double, const S2& y) { return y[0] - 0.5; }};
  const auto r = tfh::integrate_ode(rhs, 0.0, 10.0, S2{1.0, 0.0}, opt, events);
  REQUIRE(r.outcome == tfh::OdeOutcome::event_stop);
  CHECK(r.event_index == 0);
  // exp(-x) = 1/2 at x = ln 2
  CHECK(r.x_final == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

}  // namespace
