#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "kdesign/design.hpp"

namespace kdesign {

// Design file format (text, '\n' line endings):
//
//   DESIGN v=<v> b=<b>
//   <id> <id> ... <id>        one block per line, strictly ascending, each < v
//   ...
//
// The header must be the first line. Lines starting with '#' are comments
// and may appear anywhere after it. A block repeated on several lines has
// that multiplicity; b counts block lines. Blocks need not all have the same
// size (the verifier reports that case).

/// Throws ParseError (with the 1-based line number) on malformed input.
Design read_design(std::istream& in);
Design read_design(std::string_view text);
/// Throws std::runtime_error if the file cannot be opened.
Design read_design_file(const std::filesystem::path& path);

/// Canonical form: header, then blocks in lexicographic order, each repeated
/// by its multiplicity. No comments.
void write_design(const Design& d, std::ostream& out);
std::string write_design(const Design& d);

}  // namespace kdesign
