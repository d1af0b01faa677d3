#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "numrad/bounds.hpp"
#include "numrad/ensemble.hpp"
#include "numrad/rng.hpp"
#include "numrad/scalar_ineq.hpp"
#include "oracles.hpp"

using namespace numrad;
using oracles::close;

namespace {

const ComplexMatrix kCase1 = oracles::mat2(1.0, 0.5, 0.0, 1.0);
const ComplexMatrix kCase2 = oracles::mat2(2.0, -1.0, 0.0, 3.0);
const ComplexMatrix kCase3 = oracles::mat2(1.0, 1.0, 0.0, 2.0);
const ComplexMatrix kJ = oracles::mat2(1.0, 1.0, 0.0, 1.0);
const ComplexMatrix kNilpotent = oracles::mat2(0.0, 1.0, 0.0, 0.0);
const ComplexMatrix kHerm = oracles::mat2(1.0, 1.0, 1.0, 2.0);

// Normal matrix with a prescribed spectrum, hidden behind a random unitary.
ComplexMatrix normal_with_spectrum(const std::vector<cxd>& spectrum, SplitMix64& rng) {
  const int n = static_cast<int>(spectrum.size());
  const ComplexMatrix u = random_unitary(n, rng);
  ComplexMatrix d = ComplexMatrix::zero(n);
  for (int i = 0; i < n; ++i) d(i, i) = spectrum[static_cast<size_t>(i)];
  return u * d * u.adjoint();
}

}  // namespace

TEST_CASE("distance_to_scalars frozen optima") {
  const ShiftResult s3 = distance_to_scalars(kCase3);
  CHECK(close(s3.distance, 1.2071067811865475, 1e-8));
  CHECK(std::abs(s3.lambda_star - cxd(1.5)) < 1e-6);

  const ShiftResult s2 = distance_to_scalars(kCase2);
  CHECK(close(s2.distance, 1.2071067811865475, 1e-8));
  CHECK(std::abs(s2.lambda_star - cxd(2.5)) < 1e-6);

  const ShiftResult sid = distance_to_scalars(ComplexMatrix::identity(3));
  CHECK(sid.distance < 1e-12);
  CHECK(std::abs(sid.lambda_star - cxd(1.0)) < 1e-12);

  // Equal-diagonal triangular: the minimum sits at the diagonal value, where
  // only the nilpotent part [[0, 1/2], [0, 0]] is left.
  const ShiftResult s1 = distance_to_scalars(kCase1);
  CHECK(close(s1.distance, 0.5, 1e-8));
  CHECK(std::abs(s1.lambda_star - cxd(1.0)) < 1e-6);
}

TEST_CASE("distance_to_scalars on normal matrices matches the enclosing disc") {
  SplitMix64 rng(101);
  for (int t = 0; t < 30; ++t) {
    const int dim = 2 + static_cast<int>(rng.next() % 4);
    std::vector<cxd> spec;
    for (int i = 0; i < dim; ++i) spec.push_back(rng.complex_gaussian(2.0));
    const ComplexMatrix a = normal_with_spectrum(spec, rng);
    const oracles::Circle disc = oracles::enclosing_circle(spec);
    const ShiftResult s = distance_to_scalars(a);
    CAPTURE(t);
    CHECK(close(s.distance, disc.radius, 1e-5 * std::max(1.0, disc.radius)));
    CHECK(std::abs(s.lambda_star - disc.center) < 1e-4 * std::max(1.0, disc.radius));
  }
}

TEST_CASE("distance_to_scalars beats random probes and the grid oracle") {
  SplitMix64 rng(102);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = oracles::rand_matrix(rng, 2);
    const ShiftResult s = distance_to_scalars(a);
    auto nrm = [&](cxd lam) { return operator_norm(a.shifted(lam)); };
    CHECK(close(nrm(s.lambda_star), s.distance, 1e-10));
    const cxd center = a.trace() / 2.0;
    const double halfw = nrm(center);
    const double grid = oracles::grid_shift_distance(nrm, center, halfw, 81, 5);
    CAPTURE(t);
    CHECK(s.distance <= grid + 1e-4 * std::max(1.0, grid));
    for (int probe = 0; probe < 1000; ++probe) {
      const cxd lam = s.lambda_star + rng.complex_gaussian(0.5);
      CHECK(nrm(lam) >= s.distance - 1e-8);
    }
  }
}

TEST_CASE("is_hyponormal") {
  CHECK(is_hyponormal(kHerm));
  CHECK(is_hyponormal(ComplexMatrix::identity(4)));
  CHECK(is_hyponormal(oracles::mat2(0.0, 1.0, -1.0, 0.0)));  // unitary rotation
  CHECK_FALSE(is_hyponormal(kJ));
  CHECK_FALSE(is_hyponormal(kCase3));
}

TEST_CASE("SpectralCache agrees with the direct computations") {
  SpectralCache c(kCase3);
  CHECK(close(c.radius(), 2.2071067811865475, 1e-10));
  CHECK(close(c.norm(), 2.2882456112707374, 1e-10));
  CHECK(close(c.abs_sum_norm(), 4.5039184466682531, 1e-9));
  CHECK(close(c.radius_of_power(2), numerical_radius(kCase3 * kCase3).value, 1e-10));
  CHECK(oracles::close(c.square()(0, 1).real(), 3.0, 1e-14));  // [[1,3],[0,4]]
  CHECK(close(c.square_split_norm(0.5), 9.4689862703902978, 1e-8));
  CHECK(close(c.shift().distance, 1.2071067811865475, 1e-8));
  // |A| and |A*| square back to the grams.
  CHECK(oracles::close(c.abs_val()(0, 0).real(), 0.94868329805051377, 1e-10));
  const ComplexMatrix back = c.abs_adjoint() * c.abs_adjoint() - gram_adj(kCase3);
  CHECK(back.max_abs() < 1e-10);
}

TEST_CASE("kittaneh_bound frozen and structural cases") {
  const BoundReport r3 = kittaneh_bound(kCase3);
  CHECK(r3.name == "kittaneh");
  CHECK(r3.kind == BoundKind::Proven);
  CHECK(close(r3.lhs, 2.2071067811865475, 1e-9));
  CHECK(close(r3.rhs, 2.2519592233341266, 1e-9));
  CHECK(r3.holds);
  CHECK(close(r3.margin, r3.rhs - r3.lhs, 1e-15));
  CHECK(r3.params.count("tol") == 1);
  CHECK(r3.rhs <= r3.params.at("norm") + 1e-7);

  const BoundReport rj = kittaneh_bound(kJ);
  CHECK(close(rj.lhs, 1.5, 1e-9));
  CHECK(close(rj.rhs, 7.0 / (2.0 * std::sqrt(5.0)), 1e-9));

  // Hermitian: w = ||A|| and the bound is an equality.
  const BoundReport rh = kittaneh_bound(kHerm);
  CHECK(close(rh.lhs, 2.6180339887498949, 1e-9));
  CHECK(close(rh.rhs, rh.lhs, 1e-9));
}

TEST_CASE("kittaneh_blend_bound coefficients and ordering") {
  SpectralCache c(kCase3);
  const BoundReport base = kittaneh_bound(c);
  const BoundReport at0 = kittaneh_blend_bound(c, 0.0);
  CHECK(at0.name == "kittaneh_blend[rho=0]");
  CHECK(close(at0.rhs, base.rhs, 1e-14));
  const BoundReport at_half = kittaneh_blend_bound(c, 0.5);
  CHECK(close(at_half.rhs, c.norm(), 1e-14));
  const BoundReport at01 = kittaneh_blend_bound(c, 0.1);
  CHECK(at01.name == "kittaneh_blend[rho=0.1]");
  CHECK(close(at01.rhs, 2.2592165009214491, 1e-9));
  CHECK(at01.holds);
  // lambda and 1 - lambda give the same rho, hence the same bound.
  CHECK(close(kittaneh_blend_bound(c, 0.9).rhs, at01.rhs, 1e-14));
  CHECK_THROWS_AS(kittaneh_blend_bound(c, -0.1), DomainError);
  CHECK_THROWS_AS(kittaneh_blend_bound(c, 1.2), DomainError);

  SplitMix64 rng(103);
  for (int t = 0; t < 10; ++t) {
    SpectralCache cc(oracles::rand_matrix(rng, 3));
    double prev = -1.0;
    for (double rho : {0.0, 0.1, 0.25, 0.5}) {
      const BoundReport r = kittaneh_blend_bound(cc, rho);
      CAPTURE(t);
      CAPTURE(rho);
      CHECK(r.holds);
      CHECK(r.rhs >= prev - 1e-12);  // nondecreasing in rho
      prev = r.rhs;
    }
  }
}

TEST_CASE("split_shift_bound frozen evaluations") {
  SpectralCache c1(kCase1);
  const BoundReport r1 = split_shift_bound(c1, 0.5, 1.0);
  CHECK(r1.name == "split_shift[r=1,alpha=0.5]");
  CHECK(r1.kind == BoundKind::Proven);
  CHECK(r1.note.empty());
  CHECK(close(r1.lhs, 1.5625, 1e-9));
  CHECK(close(r1.rhs, 1.8152475842498527, 1e-8));
  CHECK(r1.holds);
  CHECK(close(r1.params.at("shift_distance"), 0.5, 1e-8));

  const BoundReport r2 = split_shift_bound(c1, 0.5, 2.0);
  CHECK(r2.kind == BoundKind::Empirical);
  CHECK_FALSE(r2.note.empty());
  CHECK(close(r2.lhs, 2.44140625, 1e-8));
  CHECK(close(r2.rhs, 2.5125, 1e-8));
  CHECK(r2.holds);

  // Normal matrix with spectrum {0, 2}: split = 8, distance = 1.
  SpectralCache cn(ComplexMatrix::diagonal({cxd(0.0), cxd(2.0)}));
  const BoundReport rn = split_shift_bound(cn, 0.5, 1.0);
  CHECK(close(rn.lhs, 4.0, 1e-9));
  CHECK(close(rn.rhs, 5.0, 1e-8));
  CHECK(close(rn.params.at("split_norm"), 8.0, 1e-9));
  CHECK(rn.holds);

  CHECK_THROWS_AS(split_shift_bound(c1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(split_shift_bound(c1, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(split_shift_bound(c1, 0.5, 0.75), DomainError);
}

TEST_CASE("split_shift_bound counterexample at r = 3 is reported, not asserted") {
  SpectralCache c(kCase3);
  const BoundReport r = split_shift_bound(c, 0.5, 3.0);
  CHECK(r.name == "split_shift[r=3,alpha=0.5]");
  CHECK(r.kind == BoundKind::Empirical);
  CHECK(close(r.lhs, 115.59527184052776, 1e-6));
  CHECK(close(r.rhs, 109.2193480392413, 1e-6));
  CHECK_FALSE(r.holds);
  CHECK(r.margin < -6.0);
  CHECK(r.note.find("counterexample") != std::string::npos);
}

TEST_CASE("split_shift_convex_bound is the provable lift") {
  SpectralCache c(kCase3);
  const BoundReport stated = split_shift_bound(c, 0.5, 1.0);
  const BoundReport lifted = split_shift_convex_bound(c, 0.5, 1.0);
  CHECK(close(lifted.rhs, stated.rhs, 1e-12));  // coincide at r = 1
  CHECK(lifted.kind == BoundKind::Proven);

  const BoundReport r3 = split_shift_convex_bound(c, 0.5, 3.0);
  CHECK(r3.name == "split_shift_convex[r=3,alpha=0.5]");
  CHECK(r3.kind == BoundKind::Proven);
  CHECK(close(r3.rhs, 436.87739215696519, 1e-5));
  CHECK(r3.holds);

  SplitMix64 rng(104);
  for (int t = 0; t < 15; ++t) {
    SpectralCache cc(oracles::rand_matrix(rng, 3));
    for (double alpha : {0.25, 0.5, 0.75})
      for (double r : {1.0, 2.0, 3.0}) {
        const BoundReport rep = split_shift_convex_bound(cc, alpha, r);
        CAPTURE(t);
        CAPTURE(alpha);
        CAPTURE(r);
        CHECK(rep.holds);
        CHECK(rep.margin >= -1e-7);
      }
  }
}

TEST_CASE("shift_sandwich_check premise handling") {
  // No admissible radius exists for this matrix: the shifted norm already
  // exceeds the cap, so each choice of s trips one side.
  SpectralCache c1(kCase1);
  const BoundReport too_small = shift_sandwich_check(c1, cxd(0.5), 0.5);
  CHECK(too_small.kind == BoundKind::Premise);
  CHECK(too_small.note.find("exceeds s") != std::string::npos);
  CHECK(close(too_small.params.at("shifted_norm"), 0.80901699437494745, 1e-9));
  CHECK(close(too_small.params.at("s_cap"), 0.27411789243381235, 1e-8));
  const BoundReport too_big = shift_sandwich_check(c1, cxd(0.5), 0.85);
  CHECK(too_big.kind == BoundKind::Premise);
  CHECK(too_big.note.find("s exceeds") != std::string::npos);

  // Nilpotent: A^2 = 0 collapses the cap to ||A|| and the sandwich closes:
  // w = 1/2 <= 1 <= 1.
  SpectralCache cn(kNilpotent);
  const BoundReport ok = shift_sandwich_check(cn, cxd(0.0), 1.0);
  CHECK(ok.kind == BoundKind::Proven);
  CHECK(close(ok.lhs, 0.5, 1e-9));
  CHECK(close(ok.rhs, 1.0, 1e-9));
  CHECK(ok.holds);
  CHECK(close(ok.params.at("upper_margin"), 0.0, 1e-9));

  CHECK_THROWS_AS(shift_sandwich_check(cn, cxd(0.0), 0.0), DomainError);
  CHECK_THROWS_AS(shift_sandwich_check(cn, cxd(0.0), -1.0), DomainError);

  // Unitary input: the cap radicand is zero up to rounding and must clamp,
  // not throw.
  SpectralCache cu(oracles::mat2(0.0, 1.0, -1.0, 0.0));
  const BoundReport unit = shift_sandwich_check(cu, cxd(0.0), 0.5);
  CHECK(unit.kind == BoundKind::Premise);
  CHECK(close(unit.params.at("s_cap"), 0.0, 1e-6));
}

TEST_CASE("gap_shift_bound") {
  SpectralCache c2(kCase2);
  const BoundReport r = gap_shift_bound(c2, cxd(2.5));
  CHECK(r.name == "gap_shift[lambda0=2.5]");
  CHECK(r.kind == BoundKind::Proven);
  CHECK(close(r.lhs, 0.25, 1e-8));
  CHECK(close(r.rhs, 1.4571067811865475, 1e-8));
  CHECK(r.holds);

  SpectralCache cn(kNilpotent);
  const BoundReport rn = gap_shift_bound(cn, cxd(0.0));
  CHECK(rn.name == "gap_shift[lambda0=0]");
  CHECK(close(rn.lhs, 0.25, 1e-9));
  CHECK(close(rn.rhs, 1.0, 1e-9));

  // Complex shifts are carried in the display name.
  CHECK(gap_shift_bound(cn, cxd(1.5, 1.0)).name == "gap_shift[lambda0=1.5+1i]");
  CHECK(gap_shift_bound(cn, cxd(0.0, -1.0)).name == "gap_shift[lambda0=0-1i]");

  // Normal matrices have no gap: w(A)^2 = w(A^2).
  SpectralCache ch(kHerm);
  const BoundReport rh = gap_shift_bound(ch, cxd(0.3, 0.2));
  CHECK(close(rh.lhs, 0.0, 1e-7));
  CHECK(rh.holds);

  SplitMix64 rng(105);
  for (int t = 0; t < 12; ++t) {
    SpectralCache cc(oracles::rand_matrix(rng, 3));
    for (const cxd lam : {cxd(0.0), cxd(0.7, -0.4), cc.matrix().trace() / 3.0}) {
      const BoundReport rr = gap_shift_bound(cc, lam);
      CAPTURE(t);
      CHECK(rr.holds);
      CHECK(rr.margin >= -1e-7);
    }
  }
}

TEST_CASE("projection_defect_bound") {
  const CVector e1 = {cxd(1.0), cxd(0.0)};
  const CVector e2 = {cxd(0.0), cxd(1.0)};
  const double inv_rt2 = 0.70710678118654752;
  const CVector mid = {cxd(inv_rt2), cxd(inv_rt2)};

  const BoundReport trivial =
      projection_defect_bound(e1, e1, e1, cxd(1.0), cxd(1.0), 0.1, 0.1, 1.0);
  CHECK(trivial.name == "projection_defect");
  CHECK(close(trivial.lhs, 0.0, 1e-14));
  CHECK(close(trivial.rhs, 0.01, 1e-14));
  CHECK(trivial.holds);

  // Orthogonal pair through the midpoint direction: equality at 1/2.
  const BoundReport tight = projection_defect_bound(e1, e2, mid, cxd(inv_rt2), cxd(inv_rt2),
                                                    inv_rt2, inv_rt2, 1.0);
  CHECK(close(tight.lhs, 0.5, 1e-12));
  CHECK(close(tight.rhs, 0.5, 1e-12));
  CHECK(tight.holds);
  CHECK(close(tight.params.at("residual_x"), inv_rt2, 1e-12));

  // Negative bracket: the statement is vacuous and says so.
  const BoundReport vac =
      projection_defect_bound(e1, e1, e2, cxd(0.0), cxd(0.0), 1.5, 1.5, 1.0);
  CHECK(close(vac.lhs, 0.0, 1e-14));
  CHECK(close(vac.params.at("bracket"), -1.0, 1e-12));
  CHECK(vac.note.find("vacuous") != std::string::npos);

  CHECK_THROWS_AS(
      projection_defect_bound(e1, e2, {cxd(2.0), cxd(0.0)}, cxd(0.0), cxd(0.0), 1.0, 1.0, 1.0),
      NotUnit);
  CHECK_THROWS_AS(projection_defect_bound(e1, e2, e1, cxd(0.0), cxd(0.0), -1.0, 1.0, 1.0),
                  DomainError);
  CHECK_THROWS_AS(projection_defect_bound(e1, e2, e1, cxd(0.0), cxd(0.0), 1.0, 1.0, 0.5),
                  DomainError);
  // Residual premise enforced: x sits at distance 1 from 0*z.
  CHECK_THROWS_AS(projection_defect_bound(e1, e2, e1, cxd(0.0), cxd(1.0), 0.5, 1.0, 1.0),
                  PremiseFailed);
}

TEST_CASE("projection_defect_bound holds with optimal shifts on random triples") {
  SplitMix64 rng(106);
  int vacuous = 0, active = 0;
  for (int t = 0; t < 2000; ++t) {
    const int dim = 2 + static_cast<int>(rng.next() % 3);
    const CVector x = oracles::rand_vector(rng, dim);
    const CVector y = oracles::rand_vector(rng, dim);
    const CVector z = normalized(oracles::rand_vector(rng, dim));
    const VecShift sx = min_shift_distance_vec(x, z);
    const VecShift sy = min_shift_distance_vec(y, z);
    const double a = std::sqrt(std::max(sx.min_sq, 0.0)) + 1e-9;
    const double b = std::sqrt(std::max(sy.min_sq, 0.0)) + 1e-9;
    for (double r : {1.0, 2.0}) {
      const BoundReport rep =
          projection_defect_bound(x, y, z, sx.lambda_star, sy.lambda_star, a, b, r);
      CAPTURE(t);
      CAPTURE(r);
      CHECK(rep.holds);
      CHECK(rep.margin >= -1e-7);
      (rep.note.empty() ? active : vacuous) += 1;
    }
  }
  CHECK(active > 0);
  CHECK(vacuous > 0);  // both branches exercised
}

TEST_CASE("hermitian_pair_claim is tracked as data") {
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  const BoundReport triv =
      hermitian_pair_claim(eye, eye, 1.0, 1.0, 1.0, cxd(1.0), cxd(1.0));
  CHECK(triv.name == "hermitian_pair");
  CHECK(triv.kind == BoundKind::Empirical);
  CHECK(close(triv.lhs, 1.0, 1e-9));
  CHECK(close(triv.rhs, 1.0, 1e-12));
  CHECK(triv.holds);

  const BoundReport nil =
      hermitian_pair_claim(kNilpotent, eye, 1.0, 0.01, 1.0, cxd(0.0), cxd(1.0));
  CHECK(close(nil.lhs, 0.5, 1e-9));
  CHECK(close(nil.rhs, 0.50005, 1e-9));
  CHECK(nil.holds);

  // Known violation witness: reported, never thrown.
  const ComplexMatrix sign = ComplexMatrix::diagonal({cxd(-1.0), cxd(1.0)});
  const BoundReport viol =
      hermitian_pair_claim(sign, eye, 1.0, 0.01, 1.0, cxd(0.0), cxd(1.0));
  CHECK(close(viol.lhs, 1.0, 1e-9));
  CHECK(close(viol.rhs, 0.50005, 1e-9));
  CHECK_FALSE(viol.holds);
  CHECK(viol.kind == BoundKind::Empirical);
  CHECK_FALSE(viol.note.empty());

  CHECK_THROWS_AS(hermitian_pair_claim(eye, kNilpotent, 1.0, 1.0, 1.0, cxd(0.0), cxd(0.0)),
                  NotHermitian);
  CHECK_THROWS_AS(hermitian_pair_claim(eye, ComplexMatrix::zero(2), 1.0, 1.0, 1.0, cxd(0.0),
                                       cxd(0.0)),
                  ZeroMatrix);
  CHECK_THROWS_AS(hermitian_pair_claim(sign, eye, 0.5, 0.01, 1.0, cxd(0.0), cxd(1.0)),
                  PremiseFailed);
  CHECK_THROWS_AS(hermitian_pair_claim(eye, eye, -1.0, 1.0, 1.0, cxd(1.0), cxd(1.0)),
                  DomainError);
}

TEST_CASE("kantorovich_functional_bound") {
  const CVector e1 = {cxd(1.0), cxd(0.0)};
  const double inv_rt2 = 0.70710678118654752;
  const CVector mid = {cxd(inv_rt2), cxd(inv_rt2)};
  const ComplexMatrix diag12 = ComplexMatrix::diagonal({cxd(1.0), cxd(2.0)});

  const BoundReport triv = kantorovich_functional_bound(ComplexMatrix::identity(2), e1,
                                                        cxd(1.0), cxd(1.0), 0.1, 0.1);
  CHECK(triv.name == "kantorovich_functional");
  CHECK(close(triv.lhs, 0.0, 1e-12));
  CHECK(triv.holds);

  // K(diag(1,2); midpoint) = 1.5 * 0.75 = 1.125.
  const BoundReport mid_rep =
      kantorovich_functional_bound(diag12, mid, cxd(1.5), cxd(0.75), 0.5, 0.5);
  CHECK(close(mid_rep.lhs, 0.125, 1e-10));
  CHECK(close(mid_rep.rhs, 0.25, 1e-12));
  CHECK(mid_rep.holds);
  CHECK(close(mid_rep.params.at("functional"), 1.125, 1e-10));
  CHECK(close(mid_rep.params.at("residual_a"), 0.5, 1e-10));
  CHECK(close(mid_rep.params.at("residual_b"), 0.25, 1e-10));

  // Eigenvector input: the functional collapses to 1.
  const BoundReport eig_rep =
      kantorovich_functional_bound(diag12, e1, cxd(1.0), cxd(1.0), 0.1, 0.1);
  CHECK(close(eig_rep.lhs, 0.0, 1e-10));

  CHECK_THROWS_AS(kantorovich_functional_bound(ComplexMatrix::diagonal({cxd(-1.0), cxd(1.0)}),
                                               e1, cxd(1.0), cxd(1.0), 1.0, 1.0),
                  NotPD);
  CHECK_THROWS_AS(kantorovich_functional_bound(kJ, e1, cxd(1.0), cxd(1.0), 1.0, 1.0), NotPD);
  CHECK_THROWS_AS(kantorovich_functional_bound(diag12, {cxd(2.0), cxd(0.0)}, cxd(1.0), cxd(1.0),
                                               1.0, 1.0),
                  NotUnit);
  CHECK_THROWS_AS(kantorovich_functional_bound(diag12, mid, cxd(1.5), cxd(0.75), 0.1, 0.5),
                  PremiseFailed);
  CHECK_THROWS_AS(kantorovich_functional_bound(diag12, mid, cxd(1.5), cxd(0.75), -0.5, 0.5),
                  DomainError);
}

TEST_CASE("kantorovich_functional_bound holds with projection shifts") {
  SplitMix64 rng(107);
  for (int t = 0; t < 300; ++t) {
    const int dim = 2 + static_cast<int>(rng.next() % 3);
    // Positive definite input: gram of a random matrix plus a spectral floor.
    ComplexMatrix a = gram(oracles::rand_matrix(rng, dim));
    for (int i = 0; i < dim; ++i) a(i, i) += 0.5;
    const CVector z = normalized(oracles::rand_vector(rng, dim));
    const HermitianEig eig = hermitian_eig(a);
    const CVector az = matvec(a, z);
    CVector inv_z(z.size(), cxd(0.0));
    for (int k = 0; k < dim; ++k) {
      cxd coef = 0.0;
      for (int i = 0; i < dim; ++i)
        coef += std::conj(eig.eigenvectors(i, k)) * z[static_cast<size_t>(i)];
      coef /= eig.eigenvalues[static_cast<size_t>(k)];
      for (int i = 0; i < dim; ++i) inv_z[static_cast<size_t>(i)] += coef * eig.eigenvectors(i, k);
    }
    const cxd lam = inner(az, z);
    const cxd mu = inner(inv_z, z);
    const VecShift ra = min_shift_distance_vec(az, z);
    const VecShift rb = min_shift_distance_vec(inv_z, z);
    const double abound = std::sqrt(std::max(ra.min_sq, 0.0)) + 1e-9;
    const double bbound = std::sqrt(std::max(rb.min_sq, 0.0)) + 1e-9;
    const BoundReport rep = kantorovich_functional_bound(a, z, lam, mu, abound, bbound);
    CAPTURE(t);
    CHECK(rep.holds);
    CHECK(rep.margin >= -1e-7);
    CHECK(rep.lhs >= -1e-10);  // the functional sits above 1 for PD input
  }
}

TEST_CASE("kantorovich_ratio_at") {
  // Normal input: |A| = |A*| makes the ratio 1 for every vector.
  SplitMix64 rng(108);
  for (int t = 0; t < 20; ++t) {
    const CVector x = oracles::rand_vector(rng, 2);
    CHECK(close(kantorovich_ratio_at(kHerm, x, 0.4), 1.0, 1e-10));
  }
  // Shear at e1: h = (2/sqrt5)/(3/sqrt5) = 2/3, K = 25/24.
  const CVector e1 = {cxd(1.0), cxd(0.0)};
  CHECK(close(kantorovich_ratio_at(kJ, e1, 0.5), std::sqrt(25.0 / 24.0), 1e-10));
  CHECK(close(kantorovich_ratio_at(kJ, e1, 0.5), 1.0206207261596576, 1e-9));
  // rho = 0 collapses the power to 1 regardless of the ratio.
  CHECK(close(kantorovich_ratio_at(kJ, e1, 0.0), 1.0, 1e-14));
  // Scale invariance in x.
  const CVector x2 = {cxd(3.0, -1.0), cxd(0.5, 2.0)};
  CVector x2s(x2);
  for (cxd& v : x2s) v *= cxd(0.0, 2.5);
  CHECK(close(kantorovich_ratio_at(kJ, x2, 0.3), kantorovich_ratio_at(kJ, x2s, 0.3), 1e-12));
  // Everywhere >= 1.
  for (int t = 0; t < 200; ++t) {
    const ComplexMatrix a = oracles::rand_matrix(rng, 3);
    const CVector x = oracles::rand_vector(rng, 3);
    CHECK(kantorovich_ratio_at(a, x, 0.5) >= 1.0 - 1e-12);
  }
  // Degenerate direction: <|A|x, x> = 0 has no finite ratio.
  CHECK_THROWS_AS(kantorovich_ratio_at(kNilpotent, e1, 0.5), RatioUndefined);
}

TEST_CASE("kantorovich_ratio_grad matches central finite differences") {
  SplitMix64 rng(109);
  const double lambda = 0.3;
  int checked = 0;
  for (int t = 0; t < 40 && checked < 20; ++t) {
    const ComplexMatrix a = oracles::rand_matrix(rng, 3);
    const CVector x = normalized(oracles::rand_vector(rng, 3));
    CVector d = oracles::rand_vector(rng, 3);
    const CVector g = kantorovich_ratio_grad(a, x, lambda);
    const double h = 1e-6;
    CVector xp(x), xm(x);
    for (size_t i = 0; i < x.size(); ++i) {
      xp[i] += h * d[i];
      xm[i] -= h * d[i];
    }
    double fp, fm;
    try {
      fp = kantorovich_ratio_at(a, xp, lambda);
      fm = kantorovich_ratio_at(a, xm, lambda);
    } catch (const RatioUndefined&) {
      continue;
    }
    const double fd = (fp - fm) / (2.0 * h);
    const double an = inner(g, d).real();
    if (std::abs(fd) < 1e-6) continue;  // skip near-critical directions
    CAPTURE(t);
    CHECK(close(an, fd, 1e-5 * std::max(1.0, std::abs(fd))));
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("kantorovich_ratio_inf is 1 at finite dimension") {
  CHECK(close(kantorovich_ratio_inf(kHerm, 0.5), 1.0, 1e-9));
  CHECK(close(kantorovich_ratio_inf(kJ, 0.5), 1.0, 1e-4));
  CHECK(close(kantorovich_ratio_inf(kCase3, 0.3), 1.0, 1e-4));
  CHECK(close(kantorovich_ratio_inf(ComplexMatrix::diagonal({cxd(2.0)}), 0.5), 1.0, 1e-12));
  CHECK(close(kantorovich_ratio_inf(kJ, 0.0), 1.0, 1e-12));
  SplitMix64 rng(110);
  for (int t = 0; t < 6; ++t) {
    const ComplexMatrix a = oracles::rand_matrix(rng, 3 + (t % 2));
    for (double lam : {0.1, 0.5}) {
      const double z = kantorovich_ratio_inf(a, lam);
      CAPTURE(t);
      CHECK(z >= 1.0 - 1e-12);
      CHECK(close(z, 1.0, 1e-4));
    }
  }
}

TEST_CASE("hyponormal_ratio_bound") {
  SpectralCache cn(ComplexMatrix::diagonal({cxd(1.0), cxd(2.0)}));
  const BoundReport rn = hyponormal_ratio_bound(cn, 0.5);
  CHECK(rn.name == "hyponormal_ratio");
  CHECK(close(rn.lhs, 2.0, 1e-9));
  CHECK(close(rn.rhs, 2.0, 1e-6));
  CHECK(rn.holds);
  CHECK(close(rn.params.at("zeta_inf"), 1.0, 1e-6));

  SpectralCache cu(oracles::mat2(0.0, 1.0, -1.0, 0.0));
  const BoundReport ru = hyponormal_ratio_bound(cu, 0.3);
  CHECK(close(ru.lhs, 1.0, 1e-9));
  CHECK(close(ru.rhs, 1.0, 1e-6));
  CHECK(ru.holds);

  SpectralCache cj(kJ);
  CHECK_THROWS_AS(hyponormal_ratio_bound(cj, 0.5), NotHyponormal);
}
