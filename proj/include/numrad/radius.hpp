#pragma once

#include <cstdint>

#include "numrad/matrix.hpp"

namespace numrad {

struct OptimizerConfig {
  // Angle sweep for the numerical radius.
  int theta_samples = 720;
  int refine_peaks = 3;
  double refine_width = 1e-12;
  double radius_tol = 1e-8;

  // Complex-shift minimization (distance to the scalar matrices).
  double shift_tol = 1e-6;
  int shift_grid = 9;
  double simplex_stop = 1e-8;
  int simplex_max_iter = 5000;

  // Unit-sphere minimization (Kantorovich ratio infimum).
  double sphere_tol = 1e-6;
  int sphere_starts = 64;
  int sphere_max_iter = 500;
  int sphere_grid = 256;
  std::uint64_t sphere_seed = 20260819ull;

  // Margin slack below which a verified inequality still counts as holding.
  double holds_tol = 1e-7;
};

struct RadiusResult {
  double value = 0.0;       // w(A)
  double theta_star = 0.0;  // maximizing angle in [0, 2*pi)
  CVector witness;          // unit vector with |<A x, x>| ~= w(A)
};

// Numerical radius via w(A) = max_theta lambda_max((e^{i theta} A + h.c.)/2):
// dense grid over [0, 2*pi), golden-section refinement of the best peaks.
RadiusResult numerical_radius(const ComplexMatrix& a, const OptimizerConfig& cfg = {});

// Closed form (|a1 + a2| + sqrt(|a1 - a2|^2 + |b|^2)) / 2 for [[a1, b], [0, a2]].
// Valid whenever conj(a1) * a2 is real (diagonal entries on a common phase
// ray); outside that set it can overshoot the true radius.
double triangular2x2_radius(cxd a1, cxd a2, cxd b);

// w(A)^n - w(A^n), nonnegative for all n >= 1 (power inequality).
double power_gap(const ComplexMatrix& a, int n, const OptimizerConfig& cfg = {});

}  // namespace numrad
