#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "numrad/eig.hpp"
#include "numrad/radius.hpp"

namespace numrad {

// How strongly a verified inequality is established.
//   Proven    - holds mathematically for every admissible input.
//   Premise   - conditional statement whose hypothesis failed on this input.
//   Empirical - claim tracked as data; violations are expected and recorded.
enum class BoundKind { Proven, Premise, Empirical };

const char* bound_kind_name(BoundKind k);

struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool holds = false;   // margin >= -tol
  BoundKind kind = BoundKind::Proven;
  std::string note;
  std::map<std::string, double> params;  // always carries "tol"
};

BoundReport make_bound_report(std::string name, double lhs, double rhs, double tol,
                              BoundKind kind = BoundKind::Proven);

// Nearest scalar matrix: minimizes ||A - lambda I|| over complex lambda
// (coarse grid + Nelder-Mead polish).
struct ShiftResult {
  cxd lambda_star;
  double distance = 0.0;
};
ShiftResult distance_to_scalars(const ComplexMatrix& a, const OptimizerConfig& cfg = {});

// A*A - AA* is positive semidefinite up to tol.
bool is_hyponormal(const ComplexMatrix& a, double tol = 1e-10);

// Memoizes the expensive spectral quantities of one matrix so a suite of
// bound evaluations shares them.
class SpectralCache {
 public:
  explicit SpectralCache(ComplexMatrix a, OptimizerConfig cfg = {});

  const ComplexMatrix& matrix() const { return a_; }
  const OptimizerConfig& config() const { return cfg_; }

  double radius();                // w(A)
  double radius_of_power(int n);  // w(A^n)
  double norm();                  // ||A||
  const ComplexMatrix& square();  // A^2
  const ComplexMatrix& abs_val();       // |A|
  const ComplexMatrix& abs_adjoint();   // |A*|
  double abs_sum_norm();                // || |A| + |A*| ||
  double square_split_norm(double alpha);  // || |A^2|^(2a) + |(A^2)*|^(2-2a) ||
  const ShiftResult& shift();

 private:
  ComplexMatrix a_;
  OptimizerConfig cfg_;
  std::optional<double> radius_, norm_, abs_sum_norm_;
  std::map<int, double> radius_pow_;
  std::map<double, double> split_;
  std::optional<ComplexMatrix> square_, abs_a_, abs_adj_;
  std::optional<HermitianEig> sq_gram_eig_, sq_gram_adj_eig_;
  std::optional<ShiftResult> shift_;
};

// w(A)^(2r) <= ( || |A^2|^(2a) + |(A^2)*|^(2-2a) ||^r
//               + 2^r * inf_l ||A - l I||^(2r) ) / 2^r,   0 < a < 1, r >= 1.
// Proven at r = 1; for r > 1 the 2^-r scaling fails on concrete matrices, so
// those reports carry kind Empirical with an explanatory note.
BoundReport split_shift_bound(SpectralCache& c, double alpha, double power_r);
BoundReport split_shift_bound(const ComplexMatrix& a, double alpha, double power_r,
                              const OptimizerConfig& cfg = {});

// Provable power lift of the r = 1 split/shift bound via
// (x + y)^r <= 2^(r-1) (x^r + y^r):
// w(A)^(2r) <= || ... ||^r / 2 + 2^(r-1) * inf_l ||A - l I||^(2r).
// Coincides with split_shift_bound at r = 1; holds for every r >= 1.
BoundReport split_shift_convex_bound(SpectralCache& c, double alpha, double power_r);
BoundReport split_shift_convex_bound(const ComplexMatrix& a, double alpha, double power_r,
                                     const OptimizerConfig& cfg = {});

// Conditional sandwich: when some ||A - l0 I|| <= s and
// s^2 <= ||A||^2 - || |A^2| + |(A^2)*| || / 2, then
// w(A) <= sqrt(|| |A^2| + |(A^2)*| || / 2 + s^2) <= ||A||.
// A failed hypothesis yields a Premise-kind report, never an exception.
BoundReport shift_sandwich_check(SpectralCache& c, cxd lambda0, double s);
BoundReport shift_sandwich_check(const ComplexMatrix& a, cxd lambda0, double s,
                                 const OptimizerConfig& cfg = {});

// w(A)^2 - w(A^2) <= ||A - l0 I|| * ||A* - l0 I|| for every scalar l0.
BoundReport gap_shift_bound(SpectralCache& c, cxd lambda0);
BoundReport gap_shift_bound(const ComplexMatrix& a, cxd lambda0,
                            const OptimizerConfig& cfg = {});

// w(A) <= || |A| + |A*| || / 2.
BoundReport kittaneh_bound(SpectralCache& c);
BoundReport kittaneh_bound(const ComplexMatrix& a, const OptimizerConfig& cfg = {});

// w(A) <= (1 - 2 rho)/2 * || |A| + |A*| || + 2 rho ||A||, rho = min(l, 1-l).
BoundReport kittaneh_blend_bound(SpectralCache& c, double lambda);
BoundReport kittaneh_blend_bound(const ComplexMatrix& a, double lambda,
                                 const OptimizerConfig& cfg = {});

// Vector-level defect bound: for unit z and residual bounds
// ||x - l z|| <= a, ||y - m z|| <= b,
// ( |<x,z><y,z>| - |<x,y>| )^r <= (a^(2r) + b^(2r)) / 2 when the bracket is
// nonnegative (a negative bracket makes the statement vacuous; lhs = 0).
BoundReport projection_defect_bound(const CVector& x, const CVector& y, const CVector& z,
                                    cxd lambda, cxd mu, double a, double b, double power_r,
                                    double tol = 1e-7);

// Radius claim for a Hermitian companion B: w(A)^r <= (a^(2r)+b^(2r)) /
// (2 ||B||^r) under ||A - l B|| <= a, ||B - m I|| <= b.  Tracked as
// Empirical: counterexamples exist, so `holds` is data, not an assertion.
BoundReport hermitian_pair_claim(const ComplexMatrix& a_mat, const ComplexMatrix& b_mat,
                                 double a, double b, double power_r, cxd lambda, cxd mu,
                                 const OptimizerConfig& cfg = {});

// Kantorovich functional: for positive definite A and unit z with
// ||A z - l z|| <= a and ||A^{-1} z - m z|| <= b,
// <A z, z> <A^{-1} z, z> - 1 <= (a^2 + b^2) / 2.
BoundReport kantorovich_functional_bound(const ComplexMatrix& a_mat, const CVector& z,
                                         cxd lambda, cxd mu, double a, double b,
                                         double tol = 1e-7);

// zeta(x) = K(<|A|x,x> / <|A*|x,x|>)^rho; scale-invariant in x.
double kantorovich_ratio_at(const ComplexMatrix& a, const CVector& x, double lambda);

// inf over the unit sphere (>= 1 always; == 1 whenever <|A|x,x> = <|A*|x,x>
// somewhere, which the trace identity tr|A| = tr|A*| forces at finite
// dimension).
double kantorovich_ratio_inf(const ComplexMatrix& a, double lambda,
                             const OptimizerConfig& cfg = {});

// Sphere-tangent gradient of x -> kantorovich_ratio_at(A, x, lambda) in the
// complex representation (exposed for derivative checks).
CVector kantorovich_ratio_grad(const ComplexMatrix& a, const CVector& x, double lambda);

// Hyponormal refinement: w(A) <= || |A| + |A*| || / (2 inf zeta).
BoundReport hyponormal_ratio_bound(SpectralCache& c, double lambda);
BoundReport hyponormal_ratio_bound(const ComplexMatrix& a, double lambda,
                                   const OptimizerConfig& cfg = {});

}  // namespace numrad
