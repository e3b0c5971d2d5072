#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sublat/exact/matrix.hpp"
#include "sublat/lattice/basis.hpp"

namespace sublat::catalog {

/// Parsed matrix file: a header line "rows cols" followed by rows of entries.
/// Lines starting with '#' are comments; "# checksum: fnv1a64:<hex>" is
/// verified against the canonical text of the entries.
struct MatrixText {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> tokens;
  std::string description;  // first comment line, without "# "
  std::optional<std::string> checksum;
  std::string source;
};

MatrixText parse_matrix_text(std::istream& in, const std::string& source = "<stream>");
MatrixText read_matrix_file(const std::filesystem::path& path);

/// Entries as integers; CatalogError if any token is not an integer.
exact::IntMatrix to_int_matrix(const MatrixText& m);
/// Integers, fractions "a/b" and decimals "1.25" are all read exactly.
exact::RatMatrix to_rat_matrix(const MatrixText& m);

/// "rows cols\n" then each row's tokens joined by single spaces.
std::string canonical_text(const MatrixText& m);
std::uint64_t fnv1a64(const std::string& text);
/// "fnv1a64:" followed by 16 lowercase hex digits.
std::string checksum(const MatrixText& m);

void write_matrix(std::ostream& out, const exact::IntMatrix& m, const std::string& description = {});

}  // namespace sublat::catalog
