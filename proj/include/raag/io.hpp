#pragma once

// Text formats for presentations.
//
//   # comment
//   gens a1 a2 a3 a4
//   commute a1 a4
//   commute a2 a3
//
// Exactly one `gens` line, which must precede every `commute` line.

#include <filesystem>
#include <string>
#include <string_view>

#include "raag/graph.hpp"

namespace raag {

DefiningGraph parse_presentation(std::string_view text,
                                 std::string const& source = "");
DefiningGraph load_presentation(std::filesystem::path const& path);
std::string format_presentation(DefiningGraph const& g);

/// Reads a whole file; throws ParseError naming the path if it cannot be
/// opened.
std::string read_file(std::filesystem::path const& path);

}  // namespace raag
