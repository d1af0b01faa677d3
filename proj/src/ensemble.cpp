#include "numrad/ensemble.hpp"

#include <cmath>

namespace numrad {

const char* family_name(Family f) {
  switch (f) {
    case Family::Ginibre: return "ginibre";
    case Family::Normal: return "normal";
    case Family::Hermitian: return "hermitian";
    case Family::UpperTriangular: return "upper_triangular";
    case Family::JordanShifted: return "jordan_shifted";
    case Family::Unitary: return "unitary";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  if (name == "ginibre") return Family::Ginibre;
  if (name == "normal") return Family::Normal;
  if (name == "hermitian") return Family::Hermitian;
  if (name == "upper_triangular") return Family::UpperTriangular;
  if (name == "jordan_shifted") return Family::JordanShifted;
  if (name == "unitary") return Family::Unitary;
  throw BadSpec("unknown matrix family: " + name);
}

namespace {

ComplexMatrix ginibre(int n, double scale, SplitMix64& rng) {
  ComplexMatrix m = ComplexMatrix::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.complex_gaussian(scale);
  return m;
}

}  // namespace

ComplexMatrix random_unitary(int dim, SplitMix64& rng) {
  // Modified Gram-Schmidt with one re-orthogonalization pass; restart on the
  // (measure-zero) event of a near-dependent column.
  for (;;) {
    const ComplexMatrix g = ginibre(dim, 1.0, rng);
    ComplexMatrix q = ComplexMatrix::zero(dim);
    bool ok = true;
    for (int j = 0; j < dim && ok; ++j) {
      CVector col(static_cast<size_t>(dim));
      for (int i = 0; i < dim; ++i) col[static_cast<size_t>(i)] = g(i, j);
      for (int pass = 0; pass < 2; ++pass) {
        for (int k = 0; k < j; ++k) {
          CVector prev(static_cast<size_t>(dim));
          for (int i = 0; i < dim; ++i) prev[static_cast<size_t>(i)] = q(i, k);
          const cxd proj = inner(col, prev);
          for (int i = 0; i < dim; ++i) col[static_cast<size_t>(i)] -= proj * prev[static_cast<size_t>(i)];
        }
      }
      const double nrm = vec_norm(col);
      if (nrm < 1e-10) {
        ok = false;
        break;
      }
      for (int i = 0; i < dim; ++i) q(i, j) = col[static_cast<size_t>(i)] / nrm;
    }
    if (ok) return q;
  }
}

ComplexMatrix gen_sample(const EnsembleSpec& spec, int index) {
  SplitMix64 rng = SplitMix64::for_index(spec.seed, static_cast<std::uint64_t>(index));
  const int n = spec.dim;
  switch (spec.family) {
    case Family::Ginibre:
      return ginibre(n, spec.scale, rng);
    case Family::Normal: {
      CVector diag(static_cast<size_t>(n));
      for (cxd& v : diag) v = rng.complex_gaussian(spec.scale);
      const ComplexMatrix u = random_unitary(n, rng);
      return u * ComplexMatrix::diagonal(diag) * u.adjoint();
    }
    case Family::Hermitian:
      return hermitian_part(ginibre(n, spec.scale, rng));
    case Family::UpperTriangular: {
      ComplexMatrix m = ComplexMatrix::zero(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = rng.complex_gaussian(spec.scale);
      return m;
    }
    case Family::JordanShifted: {
      const cxd c = rng.complex_gaussian(spec.scale);
      const cxd g = rng.complex_gaussian(spec.scale);
      ComplexMatrix m = ComplexMatrix::zero(n);
      for (int i = 0; i < n; ++i) m(i, i) = c;
      for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = g;
      return m;
    }
    case Family::Unitary:
      return random_unitary(n, rng);
  }
  throw BadSpec("unknown matrix family enum value");
}

std::vector<ComplexMatrix> gen_ensemble(const EnsembleSpec& spec) {
  if (spec.dim < 2) throw BadSpec("ensemble dim must be >= 2");
  if (spec.samples < 1) throw BadSpec("ensemble samples must be >= 1");
  if (!(spec.scale > 0.0)) throw BadSpec("ensemble scale must be > 0");
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<size_t>(spec.samples));
  for (int k = 0; k < spec.samples; ++k) out.push_back(gen_sample(spec, k));
  return out;
}

}  // namespace numrad
