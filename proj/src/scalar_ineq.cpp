#include "numrad/scalar_ineq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace numrad {

namespace {

void require_nonneg(double a, double b, const char* who) {
  if (a < 0.0 || b < 0.0) throw DomainError(std::string(who) + ": arguments must be >= 0");
}

double clamp_cos(double c) { return std::clamp(c, -1.0, 1.0); }

}  // namespace

YoungWeights::YoungWeights(double lambda_in, double power_r_in)
    : lambda(lambda_in), rho(std::min(lambda_in, 1.0 - lambda_in)), power_r(power_r_in) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("weight lambda must lie in [0, 1]");
  if (!(power_r >= 1.0)) throw DomainError("exponent power_r must be >= 1");
}

YoungChain young_chain(double a, double b, const YoungWeights& w) {
  require_nonneg(a, b, "young_chain");
  YoungChain out;
  out.geo = std::pow(a, w.lambda) * std::pow(b, 1.0 - w.lambda);
  out.arith = w.lambda * a + (1.0 - w.lambda) * b;
  out.power_mean =
      std::pow(w.lambda * std::pow(a, w.power_r) + (1.0 - w.lambda) * std::pow(b, w.power_r),
               1.0 / w.power_r);
  return out;
}

TwoSides power_sum_check(double a, double b, double power_r) {
  require_nonneg(a, b, "power_sum_check");
  if (!(power_r >= 1.0)) throw DomainError("exponent power_r must be >= 1");
  return {std::pow(a + b, power_r),
          std::pow(2.0, power_r - 1.0) * (std::pow(a, power_r) + std::pow(b, power_r))};
}

TwoSides kittaneh_young(double a, double b, const YoungWeights& w) {
  require_nonneg(a, b, "kittaneh_young");
  const double diff = std::sqrt(a) - std::sqrt(b);
  return {std::pow(a, w.lambda) * std::pow(b, 1.0 - w.lambda) + w.rho * diff * diff,
          w.lambda * a + (1.0 - w.lambda) * b};
}

double kantorovich_constant(double h) {
  if (!(h > 0.0)) throw DomainError("kantorovich_constant: ratio must be > 0");
  return (h + 1.0) * (h + 1.0) / (4.0 * h);
}

TwoSides kantorovich_young(double a, double b, const YoungWeights& w) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("kantorovich_young: arguments must be > 0");
  return {(1.0 - w.lambda) * a + w.lambda * b,
          std::pow(kantorovich_constant(b / a), w.rho) * std::pow(a, 1.0 - w.lambda) *
              std::pow(b, w.lambda)};
}

AnglePair angles(const CVector& x, const CVector& y) {
  const double nx = vec_norm(x);
  const double ny = vec_norm(y);
  if (nx == 0.0 || ny == 0.0) throw ZeroVector("angles: vectors must be nonzero");
  const cxd ip = inner(x, y);
  return {clamp_cos(ip.real() / (nx * ny)), clamp_cos(std::abs(ip) / (nx * ny))};
}

TriangleCheck krein_triangle_check(const AngleTriple& t) {
  const AnglePair xy = angles(t.x, t.y);
  const AnglePair yz = angles(t.y, t.z);
  const AnglePair xz = angles(t.x, t.z);
  TriangleCheck out;
  out.defect_phi = std::acos(xy.cos_phi) + std::acos(yz.cos_phi) - std::acos(xz.cos_phi);
  out.defect_psi = std::acos(xy.cos_psi) + std::acos(yz.cos_psi) - std::acos(xz.cos_psi);
  return out;
}

TwoSides schwarz_product_check(const AngleTriple& t) {
  const AnglePair xy = angles(t.x, t.y);
  const AnglePair xz = angles(t.x, t.z);
  const AnglePair zy = angles(t.z, t.y);
  const double sin_xz = std::sqrt(std::max(0.0, 1.0 - xz.cos_psi * xz.cos_psi));
  const double sin_zy = std::sqrt(std::max(0.0, 1.0 - zy.cos_psi * zy.cos_psi));
  return {xz.cos_psi * zy.cos_psi - sin_xz * sin_zy, xy.cos_psi};
}

VecShift min_shift_distance_vec(const CVector& x, const CVector& y) {
  const double ny = vec_norm(y);
  if (std::abs(ny - 1.0) > 1e-12) throw NotUnit("min_shift_distance_vec: y must be a unit vector");
  const cxd lam = inner(x, y);
  const double nx = vec_norm(x);
  return {lam, nx * nx - std::norm(lam)};
}

}  // namespace numrad
