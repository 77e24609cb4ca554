#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tfh {

// Exponent p of y'' = x^(1-p) y^p together with the homology exponent
// q = (3-p)/(p-1).  q is stored as NaN at p == 1; code that needs q must go
// through homology_exponent(), which rejects p == 1.
struct EquationParams {
  double p;
  double q;

  static EquationParams for_exponent(double p);
};

// Which second-order form a table was integrated in.  The Lane-Emden form is
// theta'' + (2/x) theta' = theta^p with theta = y/x (the +theta^p convention).
enum class Form { emden_fowler, lane_emden };

enum class StopReason { reached_end, crossed_zero, diverged };

const char* stop_reason_name(StopReason r);

struct Sample {
  double x;
  double y;
  double yp;
};

// Monotone grid of (x, y, y') samples from direct integration.  In Lane-Emden
// form the columns hold (x, theta, theta').
struct SolutionTable {
  std::vector<Sample> samples;
  EquationParams params{0.0, 0.0};
  double slope0 = 0.0;
  Form form = Form::emden_fowler;
  StopReason stop = StopReason::reached_end;
  double x_stop = 0.0;  // abscissa where integration actually ended
};

enum class Chart { coppel, milne, dresner, majorana };

const char* chart_name(Chart c);

struct CoppelUV {
  double u;
  double v;
};

struct MilneUV {
  double u;
  double v;
};

struct DresnerTauS {
  double tau;
  double s;
};

struct MajoranaTU {
  double t;
  double u;
};

using ChartPoint = std::variant<CoppelUV, MilneUV, DresnerTauS, MajoranaTU>;

// A reduced-equation right-hand side was evaluated on its singular locus
// (vanishing denominator), or an integration ran into one.
struct SingularityError : std::runtime_error {
  double where;
  SingularityError(const std::string& what, double where_)
      : std::runtime_error(what), where(where_) {}
};

// Shooting bracket endpoints failed to separate divergence from zero-crossing.
struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tfh
