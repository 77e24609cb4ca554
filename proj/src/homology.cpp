#include "tfh/homology.hpp"

#include <cmath>
#include <stdexcept>

namespace tfh {

namespace {

bool is_integer(double p) { return p == std::floor(p); }

double pow_frac_guard(double y, double p, const char* who) {
  if (y < 0 && !is_integer(p))
    throw std::domain_error(std::string(who) + ": fractional power of negative y");
  return std::pow(y, p);
}

}  // namespace

double homology_exponent(double p) {
  if (p == 1.0)
    throw std::domain_error("homology_exponent: q = (3-p)/(p-1) is singular at p = 1");
  return (3.0 - p) / (p - 1.0);
}

HomologyMap::HomologyMap(double lambda_, double q_) : lambda(lambda_), q(q_) {
  if (!(lambda > 0)) throw std::domain_error("HomologyMap: lambda must be positive");
  if (!std::isfinite(q)) throw std::domain_error("HomologyMap: q must be finite");
}

HomologyMap HomologyMap::for_params(const EquationParams& params, double lambda) {
  return HomologyMap(lambda, homology_exponent(params.p));
}

Sample apply_homology(const Sample& point, const HomologyMap& map) {
  if (!(point.x > 0)) throw std::domain_error("apply_homology: x must be positive");
  const double lq = std::pow(map.lambda, -map.q);
  return {map.lambda * point.x, lq * point.y, lq / map.lambda * point.yp};
}

CoppelUV to_coppel(double x, double y, double yp, double p) {
  if (!(x > 0)) throw std::domain_error("to_coppel: x must be positive");
  if (y == 0) throw std::domain_error("to_coppel: y = 0 (division by zero)");
  if (yp == 0) throw std::domain_error("to_coppel: y' = 0 (division by zero)");
  const double v = x * yp / y;
  const double u = std::pow(x, 2.0 - p) * pow_frac_guard(y, p, "to_coppel") / yp;
  return {u, v};
}

MilneUV to_milne(double x, double y, double yp, double p) {
  if (!(x > 0)) throw std::domain_error("to_milne: x must be positive");
  const double th = y / x;
  const double thp = (yp * x - y) / (x * x);
  if (th == 0) throw std::domain_error("to_milne: theta = 0 (division by zero)");
  if (thp == 0) throw std::domain_error("to_milne: theta' = 0 (division by zero)");
  const double v = x * thp / th;
  const double u = x * pow_frac_guard(th, p, "to_milne") / thp;
  return {u, v};
}

DresnerTauS to_dresner(double x, double y, double yp) {
  if (!(x > 0)) throw std::domain_error("to_dresner: x must be positive");
  const double x3 = x * x * x;
  return {x3 * y, x3 * x * yp};
}

MajoranaConstants solve_majorana_constants() {
  // 1/(3a^2 b) = -1  =>  b = -1/(3a^2); substituting into 4/(3a b^2) = 1
  // gives 12 a^3 = 1.  Among the representable candidates near cbrt(1/12),
  // pick the one whose defining residual 12a^3 - 1 is smallest, so the
  // algebraic identities downstream hold as tightly as doubles allow.
  double a = std::cbrt(1.0 / 12.0);
  long double best = 1.0L;
  for (int k = -2; k <= 2; ++k) {
    double cand = std::cbrt(1.0 / 12.0);
    for (int j = 0; j < (k < 0 ? -k : k); ++j)
      cand = std::nextafter(cand, k > 0 ? 1.0 : 0.0);
    const long double c = cand;
    const long double r = 12.0L * c * c * c - 1.0L;
    if (std::abs(r) < best) {
      best = std::abs(r);
      a = cand;
    }
  }
  const long double al = a;
  const double b = static_cast<double>(-1.0L / (3.0L * al * al));
  return {a, b};
}

MajoranaTU to_majorana(double x, double y, double yp, const MajoranaConstants& consts) {
  if (!(x > 0)) throw std::domain_error("to_majorana: x must be positive");
  if (!(y > 0)) throw std::domain_error("to_majorana: y must be positive");
  const double t = consts.a * std::sqrt(x) * std::pow(y, 1.0 / 6.0);
  const double u = consts.b * std::pow(y, -4.0 / 3.0) * yp;
  return {t, u};
}

MajoranaTU to_majorana(double x, double y, double yp) {
  return to_majorana(x, y, yp, solve_majorana_constants());
}

DresnerConstants solve_dresner_constants() {
  // smallest even n with integral m solving 4n - 3m = 0
  int n = 0, m = 0;
  for (n = 2;; n += 2) {
    if ((4 * n) % 3 == 0) {
      m = 4 * n / 3;
      break;
    }
  }
  // B/(3A) = -1 => B = -3A; then 4B^2/(3A^(5/2)) = 12/sqrt(A) = 1
  const double A = 12.0 * 12.0;
  const double B = -3.0 * A;
  return {A, B, n, m};
}

}  // namespace tfh
