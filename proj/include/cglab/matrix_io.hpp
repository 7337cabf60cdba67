#pragma once

// Plain-text matrix format: a header line "n m" (m = 0 for exact integers),
// then n lines of n whitespace-separated integers. Negative entries are only
// legal in exact mode; residue entries must already be canonical.

#include <iosfwd>
#include <string>

#include "cglab/matrix.hpp"

namespace cglab {

void write_matrix(std::ostream& os, const Matrix& m);
Matrix read_matrix(std::istream& is);

std::string format_matrix(const Matrix& m);
Matrix parse_matrix(const std::string& text);

}  // namespace cglab
