#include "raag/match.hpp"

namespace raag {

std::vector<std::size_t> kmp_failure(std::span<Letter const> pattern) {
  std::vector<std::size_t> failure(pattern.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    while (k > 0 && !(pattern[i] == pattern[k])) {
      k = failure[k - 1];
    }
    if (pattern[i] == pattern[k]) {
      ++k;
    }
    failure[i] = k;
  }
  return failure;
}

namespace {

// Scans text = first ++ second without materializing the concatenation.
template <typename At>
std::optional<std::size_t> kmp_scan(std::size_t text_size, At at,
                                    std::span<Letter const> pattern) {
  if (pattern.empty()) {
    return 0;
  }
  auto const failure = kmp_failure(pattern);
  std::size_t k = 0;
  for (std::size_t i = 0; i < text_size; ++i) {
    Letter const c = at(i);
    while (k > 0 && !(c == pattern[k])) {
      k = failure[k - 1];
    }
    if (c == pattern[k]) {
      ++k;
    }
    if (k == pattern.size()) {
      return i + 1 - pattern.size();
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> find_first(std::span<Letter const> text,
                                      std::span<Letter const> pattern) {
  return kmp_scan(
      text.size(), [&](std::size_t i) { return text[i]; }, pattern);
}

std::optional<std::size_t> cyclic_equal(std::span<Letter const> u,
                                        std::span<Letter const> v) {
  if (u.size() != v.size()) {
    return std::nullopt;
  }
  if (u.empty()) {
    return 0;
  }
  // v occurs in u.u at position t iff rotate_left(u, t) == v; positions
  // >= |u| repeat earlier ones, so the text u.u minus its last letter
  // suffices.
  std::size_t const n = u.size();
  return kmp_scan(
      2 * n - 1, [&](std::size_t i) { return u[i < n ? i : i - n]; }, v);
}

}  // namespace raag
