#pragma once

#include <iosfwd>
#include <string>

#include "qap/matrix.hpp"

namespace qap {

/// Matrix text format:
///   line 1            n
///   lines 2 .. n+1    n whitespace-separated rationals ("p/q" with q > 0, or
///                     an optionally signed integer)
/// Lines whose first non-space character is '#' are comments and are skipped.
/// Parse failures throw ParseError carrying a 1-based line and column.
ExactMatrix read_matrix(std::istream& in);
ExactMatrix read_matrix_file(const std::string& path);

/// Canonical serialization: reduced fractions, single spaces, one row per
/// line, trailing newline. write(read(write(M))) is byte-identical.
std::string write_matrix(const ExactMatrix& m);
void write_matrix_file(const std::string& path, const ExactMatrix& m);

/// FNV-1a 64-bit hash of the canonical serialization, as 16 hex digits.
/// Used as the machine-checkable reconstruction hash in decomposition reports.
std::string matrix_hash(const ExactMatrix& m);

/// ASCII heatmap: one row of glyphs per matrix row, darker glyph = larger
/// entry (linear ramp between the minimum and maximum entries).
std::string render_heatmap(const ExactMatrix& m);

}  // namespace qap
