#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numrad/bounds.hpp"
#include "numrad/ensemble.hpp"

namespace numrad {

// Which bound groups verify_chain evaluates.
struct ChainOptions {
  bool sandwich = true;        // ||A||/2 <= w(A) <= ||A||
  bool power = true;           // w(A^n) <= w(A)^n
  bool kittaneh = true;
  bool blend = true;           // kittaneh_blend over blend_lambdas
  bool split = true;           // split_shift over split_rs x split_alphas
  bool gap_shift = true;       // gap_shift over {0, diag mean, diag mean + i}
  bool shift_sandwich = true;  // premise-gated sandwich at s = ||A - mean I||
  bool hyponormal = true;      // only evaluated when A is hyponormal

  std::vector<int> power_ns{2, 3};
  std::vector<double> blend_lambdas{0.0, 0.1, 0.25, 0.5};
  std::vector<double> split_rs{1.0, 2.0, 3.0};
  std::vector<double> split_alphas{0.25, 0.5, 0.75};

  // The unconditional proven groups (shift_sandwich and the hyponormal
  // refinement switched off).
  static ChainOptions proven_core();
};

struct Anchors {
  double half_norm = 0.0;
  double radius = 0.0;
  double norm = 0.0;
};

struct ChainReport {
  std::string matrix_id;
  Anchors anchors;
  std::vector<BoundReport> bounds;
  std::vector<std::string> violations;     // names of failed Proven bounds
  std::optional<ComplexMatrix> witness;    // the matrix itself, kept on violation
};

ChainReport verify_chain(const ComplexMatrix& a, const OptimizerConfig& cfg = {},
                         const ChainOptions& opts = {}, std::string matrix_id = "");

struct SweepResult {
  EnsembleSpec spec;
  std::vector<ChainReport> chains;
  int violation_count = 0;
};

// Deterministic for fixed spec regardless of threads: sample k is generated
// from (seed, k) and reports are assembled in index order.
SweepResult run_sweep(const EnsembleSpec& spec, const OptimizerConfig& cfg = {},
                      const ChainOptions& opts = {}, int threads = 1);

// Re-evaluation of published worked examples on three fixed 2x2 matrices.
// Each row recomputes one quantity and compares against the printed reference
// value; rows that disagree beyond ref_tol are flagged (match = false).
struct ReproRow {
  std::string quantity;
  double reference = 0.0;
  double recomputed = 0.0;
  double abs_diff = 0.0;
  bool match = false;
};

struct ReproCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  bool premise = false;  // feasibility probe, not a proven inequality
};

struct ReproCase {
  std::string id;
  ComplexMatrix matrix;
  std::vector<ReproRow> rows;
  std::vector<ReproCheck> checks;
};

struct ReproTable {
  std::vector<ReproCase> cases;
  double ref_tol = 5e-3;
};

ReproTable reproduce_examples(const OptimizerConfig& cfg = {});

}  // namespace numrad
