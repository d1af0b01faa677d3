#include "numrad/harness.hpp"

#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace numrad {

ChainOptions ChainOptions::proven_core() {
  ChainOptions o;
  o.shift_sandwich = false;
  o.hyponormal = false;
  return o;
}

ChainReport verify_chain(const ComplexMatrix& a, const OptimizerConfig& cfg,
                         const ChainOptions& opts, std::string matrix_id) {
  SpectralCache cache(a, cfg);
  ChainReport rep;
  rep.matrix_id = std::move(matrix_id);
  rep.anchors.radius = cache.radius();
  rep.anchors.norm = cache.norm();
  rep.anchors.half_norm = 0.5 * cache.norm();

  const double tol = cfg.holds_tol;
  if (opts.sandwich) {
    rep.bounds.push_back(
        make_bound_report("radius_lower", rep.anchors.half_norm, rep.anchors.radius, tol));
    rep.bounds.push_back(
        make_bound_report("radius_upper", rep.anchors.radius, rep.anchors.norm, tol));
  }
  if (opts.power) {
    for (int n : opts.power_ns) {
      double wn = rep.anchors.radius;
      for (int i = 1; i < n; ++i) wn *= rep.anchors.radius;
      rep.bounds.push_back(make_bound_report("power[n=" + std::to_string(n) + "]",
                                             cache.radius_of_power(n), wn, tol));
    }
  }
  if (opts.kittaneh) rep.bounds.push_back(kittaneh_bound(cache));
  if (opts.blend) {
    for (double lam : opts.blend_lambdas) rep.bounds.push_back(kittaneh_blend_bound(cache, lam));
  }
  if (opts.split) {
    for (double r : opts.split_rs)
      for (double alpha : opts.split_alphas) {
        rep.bounds.push_back(split_shift_bound(cache, alpha, r));
        // The convex lift differs from split_shift only for r > 1, where it is
        // the form that actually holds.
        if (r > 1.0) rep.bounds.push_back(split_shift_convex_bound(cache, alpha, r));
      }
  }
  const cxd mean = a.trace() / static_cast<double>(a.dim());
  if (opts.gap_shift) {
    const cxd l0s[3] = {cxd(0.0, 0.0), mean, mean + cxd(0.0, 1.0)};
    for (const cxd& l0 : l0s) rep.bounds.push_back(gap_shift_bound(cache, l0));
  }
  if (opts.shift_sandwich) {
    const double s = operator_norm(a.shifted(mean));
    // s must be positive; a scalar matrix leaves nothing to gate on.
    if (s > 0.0) rep.bounds.push_back(shift_sandwich_check(cache, mean, s));
  }
  if (opts.hyponormal && is_hyponormal(a)) {
    rep.bounds.push_back(hyponormal_ratio_bound(cache, 0.5));
  }

  for (const BoundReport& b : rep.bounds) {
    if (b.kind == BoundKind::Proven && !b.holds) rep.violations.push_back(b.name);
  }
  if (!rep.violations.empty()) rep.witness = a;
  return rep;
}

SweepResult run_sweep(const EnsembleSpec& spec, const OptimizerConfig& cfg,
                      const ChainOptions& opts, int threads) {
  if (spec.dim < 2) throw BadSpec("ensemble dim must be >= 2");
  if (spec.samples < 1) throw BadSpec("ensemble samples must be >= 1");
  if (!(spec.scale > 0.0)) throw BadSpec("ensemble scale must be > 0");
  threads = std::max(1, std::min(threads, spec.samples));

  SweepResult out;
  out.spec = spec;
  out.chains.resize(static_cast<size_t>(spec.samples));

  std::exception_ptr first_error;
  std::mutex error_mu;
  auto work = [&](int worker) {
    for (int k = worker; k < spec.samples; k += threads) {
      try {
        const ComplexMatrix a = gen_sample(spec, k);
        const std::string id = std::string(family_name(spec.family)) + "-d" +
                               std::to_string(spec.dim) + "-s" + std::to_string(k);
        out.chains[static_cast<size_t>(k)] = verify_chain(a, cfg, opts, id);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (const ChainReport& c : out.chains) {
    out.violation_count += static_cast<int>(c.violations.size());
  }
  return out;
}

namespace {

ReproRow make_row(std::string quantity, double reference, double recomputed, double ref_tol) {
  ReproRow r;
  r.quantity = std::move(quantity);
  r.reference = reference;
  r.recomputed = recomputed;
  r.abs_diff = std::abs(recomputed - reference);
  r.match = r.abs_diff <= ref_tol;
  return r;
}

}  // namespace

ReproTable reproduce_examples(const OptimizerConfig& cfg) {
  ReproTable table;
  const double rt = table.ref_tol;

  {
    // Unit upper-triangular with off-diagonal 1/2; published shift lambda0 = 1/2.
    ReproCase c;
    c.id = "case1";
    c.matrix = ComplexMatrix(2, {cxd(1.0), cxd(0.5), cxd(0.0), cxd(1.0)});
    SpectralCache cache(c.matrix, cfg);
    const double w = cache.radius();
    const double nrm = cache.norm();
    const double half_split = 0.5 * cache.square_split_norm(0.5);
    const double shifted = operator_norm(c.matrix.shifted(cxd(0.5)));
    const double cap_sq = nrm * nrm - half_split;
    const double cap = std::sqrt(std::max(cap_sq, 0.0));
    c.rows.push_back(make_row("radius_sq", 1.5625, w * w, rt));
    c.rows.push_back(make_row("norm_sq", 3.2822, nrm * nrm, rt));
    c.rows.push_back(make_row("shifted_norm", 0.5201, shifted, rt));
    c.rows.push_back(make_row("half_abs_sum_of_sq", 1.5652, half_split, rt));
    c.rows.push_back(make_row("s_cap_sq", 1.7170, cap_sq, rt));
    c.rows.push_back(make_row("s_cap", 1.3103, cap, rt));
    // Feasibility of the conditional sandwich: needs shifted_norm <= s <= cap.
    ReproCheck feas;
    feas.name = "shift_sandwich_premise";
    feas.lhs = shifted;
    feas.rhs = cap;
    feas.holds = shifted <= cap + cfg.holds_tol;
    feas.premise = true;
    c.checks.push_back(feas);
    table.cases.push_back(std::move(c));
  }

  {
    // Triangular [[2, -1], [0, 3]]; published shift lambda0 = 2.5.
    ReproCase c;
    c.id = "case2";
    c.matrix = ComplexMatrix(2, {cxd(2.0), cxd(-1.0), cxd(0.0), cxd(3.0)});
    SpectralCache cache(c.matrix, cfg);
    const double w = cache.radius();
    const double w2 = cache.radius_of_power(2);
    const double nrm = cache.norm();
    const double shifted = operator_norm(c.matrix.shifted(cxd(2.5)));
    const double shifted_adj = operator_norm(c.matrix.adjoint().shifted(cxd(2.5)));
    const double cap_sq = nrm * nrm - w2;
    const double cap = std::sqrt(std::max(cap_sq, 0.0));
    c.rows.push_back(make_row("radius_of_sq", 6.4142, w2, rt));
    c.rows.push_back(make_row("norm_sq", 10.6054, nrm * nrm, rt));
    c.rows.push_back(make_row("shifted_norm", 0.955, shifted, rt));
    c.rows.push_back(make_row("s_cap", 2.0472, cap, rt));
    ReproCheck gap;
    gap.name = "gap_shift";
    gap.lhs = w * w - w2;
    gap.rhs = shifted * shifted_adj;
    gap.holds = gap.lhs <= gap.rhs + cfg.holds_tol;
    c.checks.push_back(gap);
    ReproCheck feas;
    feas.name = "power_shift_premise";
    feas.lhs = shifted;
    feas.rhs = cap;
    feas.holds = shifted <= cap + cfg.holds_tol;
    feas.premise = true;
    c.checks.push_back(feas);
    table.cases.push_back(std::move(c));
  }

  {
    // Triangular [[1, 1], [0, 2]]; published blend weight rho = 0.1.
    ReproCase c;
    c.id = "case3";
    c.matrix = ComplexMatrix(2, {cxd(1.0), cxd(1.0), cxd(0.0), cxd(2.0)});
    SpectralCache cache(c.matrix, cfg);
    const double w = cache.radius();
    const double nrm = cache.norm();
    const double half_abs = 0.5 * cache.abs_sum_norm();
    const BoundReport blend = kittaneh_blend_bound(cache, 0.1);
    c.rows.push_back(make_row("radius", 2.2071, w, rt));
    c.rows.push_back(make_row("norm", 2.2882, nrm, rt));
    c.rows.push_back(make_row("half_abs_sum", 2.2518, half_abs, rt));
    c.rows.push_back(make_row("blend_rhs", 2.2590, blend.rhs, rt));
    ReproCheck lower;
    lower.name = "blend_ge_radius";
    lower.lhs = w;
    lower.rhs = blend.rhs;
    lower.holds = w <= blend.rhs + cfg.holds_tol;
    c.checks.push_back(lower);
    ReproCheck upper;
    upper.name = "blend_le_norm";
    upper.lhs = blend.rhs;
    upper.rhs = nrm;
    upper.holds = blend.rhs <= nrm + cfg.holds_tol;
    c.checks.push_back(upper);
    table.cases.push_back(std::move(c));
  }

  return table;
}

}  // namespace numrad
