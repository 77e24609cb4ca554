#pragma once

#include "tfh/types.hpp"

namespace tfh {

// q = (3-p)/(p-1); the scaling x -> lambda*x, y -> lambda^(-q)*y maps
// solutions of y'' = x^(1-p) y^p to solutions.
double homology_exponent(double p);

struct HomologyMap {
  double lambda;
  double q;

  HomologyMap(double lambda, double q);
  static HomologyMap for_params(const EquationParams& params, double lambda);
};

// Prolongation of the scaling to solution jets:
// (x, y, y') -> (lambda*x, lambda^(-q)*y, lambda^(-1-q)*y').
// Every homology-invariant chart value is unchanged under this map.
Sample apply_homology(const Sample& point, const HomologyMap& map);

// v = x y'/y, u = x^(2-p) y^p / y'; u*v = x^(3-p) y^(p-1)
CoppelUV to_coppel(double x, double y, double yp, double p);

// theta = y/x; v = x theta'/theta, u = x theta^p / theta'; u*v = x^2 theta^(p-1)
MilneUV to_milne(double x, double y, double yp, double p);

// tau = x^3 y, s = x^4 y'
DresnerTauS to_dresner(double x, double y, double yp);

struct MajoranaConstants {
  double a;
  double b;
};

// Constants making the reduced equation's coefficients unity:
// 4/(3ab^2) = 1 and 1/(3a^2 b) = -1, i.e. a = 144^(-1/6), b = -4a.
MajoranaConstants solve_majorana_constants();

// t = a x^(1/2) y^(1/6), u = b y^(-4/3) y'   (canonical constants by default)
MajoranaTU to_majorana(double x, double y, double yp);
MajoranaTU to_majorana(double x, double y, double yp, const MajoranaConstants& consts);

struct DresnerConstants {
  double A;
  double B;
  int n;
  int m;
};

// Constants of the rationalizing substitution tau = A t^n, s = B u t^m:
// 4n - 3m = 0 with the smallest even n gives n=6, m=8; the coefficient
// conditions give A = 144, B = -3A.
DresnerConstants solve_dresner_constants();

}  // namespace tfh
