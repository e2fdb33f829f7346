#pragma once

// Exact matching over letter sequences (Knuth-Morris-Pratt).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "raag/word.hpp"

namespace raag {

/// failure[k] = length of the longest proper border of pattern[0..k].
std::vector<std::size_t> kmp_failure(std::span<Letter const> pattern);

/// Position of the first occurrence of `pattern` in `text`.
std::optional<std::size_t> find_first(std::span<Letter const> text,
                                      std::span<Letter const> pattern);

/// Smallest t with rotate_left(u, t) == v, or nullopt. O(|u| + |v|).
std::optional<std::size_t> cyclic_equal(std::span<Letter const> u,
                                        std::span<Letter const> v);

}  // namespace raag
