#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// A signed generator a_i^{+1} or a_i^{-1}.
struct Letter {
  GenIndex gen = 0;
  int sign = 1;

  constexpr Letter inverse() const noexcept { return Letter{gen, -sign}; }

  friend constexpr bool operator==(Letter, Letter) = default;
};

inline constexpr Letter pos(GenIndex i) noexcept { return Letter{i, 1}; }
inline constexpr Letter neg(GenIndex i) noexcept { return Letter{i, -1}; }

using Word = std::vector<Letter>;

/// Formal inverse: reversed with every sign flipped.
Word inverse(std::span<Letter const> w);

/// Left rotation by `shift` letters (shift taken modulo |w|).
Word rotate_left(std::span<Letter const> w, std::size_t shift);

Word concat(std::span<Letter const> a, std::span<Letter const> b);

/// True iff no two adjacent letters are mutually inverse.
bool is_freely_reduced(std::span<Letter const> w);

enum class WordStyle {
  collapsed,  // runs of equal letters as `a^k`
  expanded,   // one token per letter
};

/// Parses whitespace-separated tokens `name` or `name^k` (k a nonzero
/// integer, expanded into |k| letters). Throws ParseError.
Word parse_word(DefiningGraph const& g, std::string_view text);

/// Spelling of a word; the empty word is the empty string.
std::string format_word(DefiningGraph const& g, std::span<Letter const> w,
                        WordStyle style = WordStyle::collapsed);

/// Hash over letter sequences, for unordered containers of words.
struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

}  // namespace raag
