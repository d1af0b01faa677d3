#pragma once

#include "numrad/matrix.hpp"

namespace numrad {

// Weight bundle for the weighted-mean inequalities: lambda in [0, 1],
// rho = min(lambda, 1 - lambda), and an exponent power_r >= 1.
struct YoungWeights {
  double lambda;
  double rho;
  double power_r;

  explicit YoungWeights(double lambda_in, double power_r_in = 1.0);
};

struct YoungChain {
  double geo;         // a^lambda * b^(1-lambda)
  double arith;       // lambda*a + (1-lambda)*b
  double power_mean;  // (lambda*a^r + (1-lambda)*b^r)^(1/r)
};

// Weighted geometric <= arithmetic <= r-power mean, for a, b >= 0.
YoungChain young_chain(double a, double b, const YoungWeights& w);

// lhs = (a+b)^r, rhs = 2^(r-1) * (a^r + b^r); lhs <= rhs for r >= 1.
struct TwoSides {
  double lhs;
  double rhs;
};
TwoSides power_sum_check(double a, double b, double power_r);

// lhs = a^lambda b^(1-lambda) + rho (sqrt(a) - sqrt(b))^2, rhs = weighted
// arithmetic mean; the square-difference term refines the Young inequality.
TwoSides kittaneh_young(double a, double b, const YoungWeights& w);

// K(h) = (h+1)^2 / (4h) for h > 0.
double kantorovich_constant(double h);

// lhs = (1-lambda) a + lambda b, rhs = K(b/a)^rho * a^(1-lambda) * b^lambda;
// lhs >= rhs for a, b > 0 (Kantorovich-sharpened Young inequality).
TwoSides kantorovich_young(double a, double b, const YoungWeights& w);

// Real and absolute cosines of the angle between nonzero vectors:
// cos_phi = Re<x,y> / (|x||y|), cos_psi = |<x,y>| / (|x||y|).
struct AnglePair {
  double cos_phi;
  double cos_psi;
};
AnglePair angles(const CVector& x, const CVector& y);

// A triple of nonzero vectors for the angle triangle inequalities.
struct AngleTriple {
  CVector x;
  CVector y;
  CVector z;
};

// Angle triangle inequalities for both cosine flavors:
// angle(x, z) <= angle(x, y) + angle(y, z).  Defects are rhs - lhs (each
// nonnegative up to rounding).
struct TriangleCheck {
  double defect_phi;
  double defect_psi;
};
TriangleCheck krein_triangle_check(const AngleTriple& t);

// Product form of the absolute-angle triangle inequality:
// cos(psi_xy) >= cos(psi_xz) cos(psi_zy) - sin(psi_xz) sin(psi_zy).
TwoSides schwarz_product_check(const AngleTriple& t);

// Over scalars mu, || x - mu y ||^2 is minimized at mu = <x, y> for unit y;
// the minimum is ||x||^2 - |<x,y>|^2.
struct VecShift {
  cxd lambda_star;
  double min_sq;
};
VecShift min_shift_distance_vec(const CVector& x, const CVector& y);

}  // namespace numrad
