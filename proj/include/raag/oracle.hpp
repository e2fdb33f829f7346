#pragma once

// Brute-force reference deciders for small inputs. Nothing here touches
// pilings or normal forms: everything is closure search over words using
// only the commutation relation of the presentation and the transition
// table of a complex.

#include <cstddef>
#include <span>
#include <unordered_set>

#include "raag/cube_complex.hpp"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag::oracle {

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

struct Limits {
  std::size_t max_length = 16;         // combined input length
  std::size_t max_closure = 2'000'000;  // words held by one closure
};

class WordSet {
 public:
  bool insert(Word w) { return words_.insert(std::move(w)).second; }
  bool contains(Word const& w) const { return words_.count(w) != 0; }
  std::size_t size() const noexcept { return words_.size(); }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

 private:
  std::unordered_set<Word, WordHash> words_;
};

/// Deletes pairs a^e x a^-e with every letter of x commuting with a until
/// none is left. Each deletion is a run of adjacent commutation swaps
/// followed by one adjacent cancellation.
Word reduce(DefiningGraph const& g, std::span<Letter const> w);

/// All words obtained from `w` by adjacent commutation swaps.
WordSet commutation_closure(DefiningGraph const& g, std::span<Letter const> w,
                            Limits const& limits = {});

/// Lexicographically least word reachable by adjacent commutation swaps,
/// built greedily: repeatedly take the least letter that can be moved to the
/// front. Letters are ordered by generator, then a before a^-1.
Word commutation_min(DefiningGraph const& g, std::span<Letter const> w);

/// Reduces both words and compares their commutation_min.
bool oracle_equal(DefiningGraph const& g, std::span<Letter const> w,
                  std::span<Letter const> v, Limits const& limits = {});

bool oracle_identity(DefiningGraph const& g, std::span<Letter const> w,
                     Limits const& limits = {});

/// A cyclically reduced conjugate, found by searching the closure under
/// cyclings and commutations for a word that shortens.
Word cyclically_reduce(DefiningGraph const& g, std::span<Letter const> w,
                       Limits const& limits = {});

/// Least word, in the order of commutation_min, among the cyclically
/// reduced conjugates reachable by cyclings and commutations. Two words are
/// conjugate iff their keys coincide.
Word conjugacy_key(DefiningGraph const& g, std::span<Letter const> w,
                   Limits const& limits = {});

bool oracle_conjugate(DefiningGraph const& g, std::span<Letter const> w,
                      std::span<Letter const> v, Limits const& limits = {});

/// Searches edge paths u from first.base to second.base of length at most
/// `max_conj_len` with u . second.word . u^-1 equal to first.word.
bool oracle_groupoid_conjugate(CubeComplexMap const& cx,
                               BasedWord const& first, BasedWord const& second,
                               std::size_t max_conj_len = 8);

}  // namespace raag::oracle
