#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numrad/matrix.hpp"
#include "numrad/rng.hpp"

namespace numrad {

enum class Family { Ginibre, Normal, Hermitian, UpperTriangular, JordanShifted, Unitary };

const char* family_name(Family f);
Family parse_family(const std::string& name);  // throws BadSpec

struct EnsembleSpec {
  Family family = Family::Ginibre;
  int dim = 2;
  int samples = 1;
  std::uint64_t seed = 0;
  double scale = 1.0;
};

// Deterministic: sample k depends only on (spec.seed, k), so a run is
// reproducible regardless of batching or thread count.
std::vector<ComplexMatrix> gen_ensemble(const EnsembleSpec& spec);  // throws BadSpec
ComplexMatrix gen_sample(const EnsembleSpec& spec, int index);

// Haar-ish unitary from modified Gram-Schmidt on a gaussian matrix.
ComplexMatrix random_unitary(int dim, SplitMix64& rng);

}  // namespace numrad
