#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "raag/conjugacy.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

struct Root {
  Word word;              // z, a prefix of the factor
  std::size_t power = 1;  // r, with z^r equal to the factor letter for letter

  friend bool operator==(Root const&, Root const&) = default;
};

/// Canonical generating set of the centralizer of a product of mutually
/// commuting cyclic normal forms: the minimal root of each factor, plus the
/// generators that commute with the whole support without occurring in it.
struct CentralizerGens {
  std::vector<Root> roots;
  std::vector<GenIndex> link_gens;  // increasing

  /// Every generator as a word: the roots, then one letter per link
  /// generator.
  std::vector<Word> words() const;
};

/// Shortest period of a cyclic normal form, found as the first occurrence
/// of w inside (w.w minus its first letter). Throws PilingError on the empty
/// word.
Root minimal_root(std::span<Letter const> w);

CentralizerGens centralizer_generators(DefiningGraph const& g,
                                       CyclicNormalFactors const& factors);

}  // namespace raag
