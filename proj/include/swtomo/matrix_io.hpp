#pragma once

#include <iosfwd>
#include <string>

#include "swtomo/types.hpp"

namespace swt {

// Golden-file matrix format: 8-byte magic "SWTMTX01", int64 rows, int64 cols
// (little-endian), then row-major entries as interleaved little-endian
// 8-byte floats (re, im).
void write_matrix(const CMat& m, std::ostream& os);
CMat read_matrix(std::istream& is);

void write_matrix_file(const CMat& m, const std::string& path);
CMat read_matrix_file(const std::string& path);

}  // namespace swt
