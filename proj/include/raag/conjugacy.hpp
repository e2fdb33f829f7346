#pragma once

// Normal forms, cyclic normal forms and the conjugacy decision.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "raag/graph.hpp"
#include "raag/piling.hpp"
#include "raag/word.hpp"

namespace raag {

/// The unique reduced word representing an element whose every suffix
/// starts with the largest extractable generator.
struct NormalForm {
  Word word;

  friend bool operator==(NormalForm const&, NormalForm const&) = default;
};

NormalForm normal_form(DefiningGraph const& g, std::span<Letter const> w);

/// Word problem: does `w` represent the identity?
bool is_identity(DefiningGraph const& g, std::span<Letter const> w);

bool is_normal(DefiningGraph const& g, std::span<Letter const> w);

/// Cyclically reduced and every rotation normal. Checked in linear time as
/// normality of w.w, which holds exactly when every rotation is normal.
bool is_cyclic_normal(DefiningGraph const& g, std::span<Letter const> w);

/// A conjugate of the input written as a product of mutually commuting
/// cyclic normal forms, one per connected component of its support.
struct CyclicNormalFactors {
  std::vector<Word> factors;
  /// Sorted generator set of each factor, ordered by smallest generator.
  std::vector<std::vector<GenIndex>> components;
  /// Cyclic reductions first, then the cyclings of each factor in order.
  /// The product e of the event letters satisfies
  ///   product() ~ e^-1 . input . e.
  std::vector<CyclingEvent> events;

  Word product() const;
  std::size_t length() const;
};

CyclicNormalFactors cyclic_normal_factors(DefiningGraph const& g,
                                          std::span<Letter const> w);

struct ConjugacyCertificate {
  bool conjugate = false;
  CyclicNormalFactors first;
  CyclicNormalFactors second;
  /// shifts[k] = t with rotate_left(first.factors[k], t) ==
  /// second.factors[k]; only filled when the components coincide.
  std::vector<std::optional<std::size_t>> shifts;
};

ConjugacyCertificate decide_conjugacy(DefiningGraph const& g,
                                      std::span<Letter const> w,
                                      std::span<Letter const> v);

bool conjugate_in_raag(DefiningGraph const& g, std::span<Letter const> w,
                       std::span<Letter const> v);

}  // namespace raag
