#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "trop/matrix.hpp"

namespace trop {

/// Text formats. A matrix file holds one row per line, entries separated by
/// whitespace; blank lines are ignored. Each entry is an integer ("3", "-2"),
/// an exact decimal ("0.5", "-1.25"), or a fraction ("p/q" with q > 0).
/// The token "-inf" is reserved for extended matrices and is rejected
/// wherever a finite matrix is expected. A vector file is a matrix file with
/// a single row or a single column.

/// Parses one entry token; `where` names its position in error messages.
Rat parse_rational(const std::string& token, const std::string& where = "");

Mat parse_matrix(std::istream& in, const std::string& source = "input");
Mat parse_matrix_string(const std::string& text, const std::string& source = "input");
Mat read_matrix_file(const std::string& path);

Vec parse_vector(std::istream& in, const std::string& source = "input");
Vec read_vector_file(const std::string& path);

/// Reads a whole file; throws ParseError when unreadable.
std::string read_file_bytes(const std::string& path);

/// FNV-1a 64-bit over a byte string, as 16 lowercase hex digits. Used to
/// fingerprint CLI inputs in reports.
std::string fnv1a_hex(const std::string& bytes);

std::string format_matrix(const Mat& a);
std::string format_matrix(const ExtMat& a);
std::string format_vector(const Vec& v);

}  // namespace trop
