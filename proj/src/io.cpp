#include "raag/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "raag/error.hpp"
#include "text.hpp"

namespace raag {

DefiningGraph parse_presentation(std::string_view text,
                                 std::string const& source) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  bool have_gens = false;
  std::size_t line_no = 0;
  for (auto const& line : detail::split_lines(text)) {
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) {
      continue;
    }
    if (tokens[0] == "gens") {
      if (have_gens) {
        throw ParseError(source, line_no, tokens[0], "duplicate gens line");
      }
      if (tokens.size() < 2) {
        throw ParseError(source, line_no, tokens[0],
                         "gens line needs at least one name");
      }
      have_gens = true;
      names.assign(tokens.begin() + 1, tokens.end());
    } else if (tokens[0] == "commute") {
      if (!have_gens) {
        throw ParseError(source, line_no, tokens[0],
                         "commute line before gens line");
      }
      if (tokens.size() != 3) {
        throw ParseError(source, line_no, tokens[0],
                         "commute line needs exactly two names");
      }
      pairs.emplace_back(tokens[1], tokens[2]);
      try {
        DefiningGraph::build(names, {pairs.back()});
      } catch (ParseError const& e) {
        throw ParseError(source, line_no, e.token(), e.reason());
      }
    } else {
      throw ParseError(source, line_no, tokens[0], "unknown directive");
    }
  }
  if (!have_gens) {
    throw ParseError(source, 0, "", "missing gens line");
  }
  try {
    return DefiningGraph::build(std::move(names), pairs);
  } catch (ParseError const& e) {
    throw ParseError(source, 0, e.token(), e.reason());
  }
}

DefiningGraph load_presentation(std::filesystem::path const& path) {
  return parse_presentation(read_file(path), path.string());
}

std::string format_presentation(DefiningGraph const& g) {
  std::string out = "gens";
  for (auto const& name : g.names()) {
    out += ' ' + name;
  }
  out += '\n';
  for (auto [i, j] : g.commuting_pairs()) {
    out += "commute " + g.name(i) + ' ' + g.name(j) + '\n';
  }
  return out;
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string(), 0, "", "cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace raag
