#include "raag/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "raag/error.hpp"

namespace raag {

Word inverse(std::span<Letter const> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

Word rotate_left(std::span<Letter const> w, std::size_t shift) {
  Word out(w.begin(), w.end());
  if (!out.empty()) {
    std::rotate(out.begin(), out.begin() + (shift % out.size()), out.end());
  }
  return out;
}

Word concat(std::span<Letter const> a, std::span<Letter const> b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool is_freely_reduced(std::span<Letter const> w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w[k] == w[k - 1].inverse()) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t k = 0;
  while (k < text.size()) {
    while (k < text.size() &&
           std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
    }
    std::size_t start = k;
    while (k < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
    }
    if (k > start) {
      tokens.push_back(text.substr(start, k - start));
    }
  }
  return tokens;
}

}  // namespace

Word parse_word(DefiningGraph const& g, std::string_view text) {
  Word out;
  for (auto token : split_whitespace(text)) {
    std::string_view name = token;
    long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      auto digits = token.substr(caret + 1);
      if (!digits.empty() && digits.front() == '+') {
        digits.remove_prefix(1);
      }
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(),
                          exponent);
      if (digits.empty() || ec != std::errc{} ||
          ptr != digits.data() + digits.size()) {
        throw ParseError("", 0, std::string(token), "malformed exponent");
      }
      if (exponent == 0) {
        throw ParseError("", 0, std::string(token), "zero exponent");
      }
    }
    auto gen = g.find(name);
    if (!gen) {
      throw ParseError("", 0, std::string(token), "unknown generator");
    }
    Letter const letter{*gen, exponent > 0 ? 1 : -1};
    out.insert(out.end(), static_cast<std::size_t>(std::labs(exponent)),
               letter);
  }
  return out;
}

std::string format_word(DefiningGraph const& g, std::span<Letter const> w,
                        WordStyle style) {
  std::string out;
  std::size_t k = 0;
  while (k < w.size()) {
    std::size_t run = 1;
    if (style == WordStyle::collapsed) {
      while (k + run < w.size() && w[k + run] == w[k]) {
        ++run;
      }
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += g.name(w[k].gen);
    long const exponent = static_cast<long>(run) * w[k].sign;
    if (exponent != 1) {
      out += '^';
      out += std::to_string(exponent);
    }
    k += run;
  }
  return out;
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto const& l : w) {
    h ^= (l.gen << 1) | (l.sign > 0 ? 1u : 0u);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace raag
