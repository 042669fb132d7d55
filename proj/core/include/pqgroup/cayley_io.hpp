#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pqgroup/group.hpp"

namespace pqgroup {

// Cayley-table text format:
//
//   # comment lines start with '#'
//   <order n>
//   <n lines of n space-separated indices; row i column j is g_i * g_j>
//
// Element 0 must be the identity and the file must end with a newline.
// Parse failures throw GroupError(Parse) naming the offending line; tables
// that parse but are not groups throw the corresponding validation error.
GroupPtr parse_cayley(std::string_view text);
GroupPtr read_cayley(std::istream& in);
GroupPtr read_cayley_file(const std::filesystem::path& path);

// Writes the canonical encoding: optional "# <comment>" line, the order, then
// rows joined by single spaces, each line terminated by '\n'.
void write_cayley(std::ostream& out, const FiniteGroup& g, std::string_view comment = {});
std::string to_cayley_string(const FiniteGroup& g, std::string_view comment = {});
void write_cayley_file(const std::filesystem::path& path, const FiniteGroup& g, std::string_view comment = {});

}  // namespace pqgroup
