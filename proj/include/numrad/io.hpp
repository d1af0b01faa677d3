#pragma once

#include <string>

#include "numrad/harness.hpp"

namespace numrad {

// Shortest-faithful decimal: 17 significant digits round-trip binary64.
std::string fmt17(double x);

// {"dim": n, "entries": [[re, im], ...]} with row-major entries of length n*n.
ComplexMatrix matrix_from_json_text(const std::string& text);  // throws BadInput
ComplexMatrix load_matrix_json(const std::string& path);       // throws BadInput
std::string matrix_to_json(const ComplexMatrix& a);

std::string chain_to_json(const ChainReport& r);
std::string chain_to_csv(const ChainReport& r);
std::string sweep_to_json(const SweepResult& r);
std::string sweep_to_csv(const SweepResult& r);
std::string repro_to_json(const ReproTable& t);
std::string repro_to_csv(const ReproTable& t);

void write_text_file(const std::string& path, const std::string& text);  // throws BadInput

}  // namespace numrad
