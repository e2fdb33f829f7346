#pragma once

// Right-angled Artin group presentations.
//
// A presentation is stored as its non-commutation graph: generators i and j
// are adjacent iff they do NOT commute. Generator indices are 0-based in the
// API; the declaration order of the generators is the total order used by
// every normal form, so it is part of the presentation.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

using GenIndex = std::size_t;

class DefiningGraph {
 public:
  DefiningGraph();

  /// Builds a presentation from generator names and the pairs of generators
  /// that commute. Throws ParseError on duplicate names, unknown names or
  /// self-pairs.
  static DefiningGraph build(
      std::vector<std::string> names,
      std::vector<std::pair<std::string, std::string>> const& commuting_pairs);

  /// Builds a presentation directly from a non-commutation adjacency over
  /// 0-based indices. The relation is symmetrized; diagonal entries must be
  /// absent.
  static DefiningGraph from_noncommuting(
      std::vector<std::string> names,
      std::vector<std::pair<GenIndex, GenIndex>> const& noncommuting_pairs);

  /// Free group on `n` generators named a1..an.
  static DefiningGraph free_group(std::size_t n);

  std::size_t size() const noexcept { return impl_->names.size(); }

  std::string const& name(GenIndex i) const;
  std::vector<std::string> const& names() const noexcept {
    return impl_->names;
  }
  std::optional<GenIndex> find(std::string_view name) const;

  /// True iff i != j and the generators are joined by an edge.
  bool noncommute(GenIndex i, GenIndex j) const;

  /// True iff i != j and the generators commute. A generator is never
  /// treated as commuting with itself. Throws std::out_of_range.
  bool commutes(GenIndex i, GenIndex j) const;

  /// Generators not commuting with i, in increasing order. This is the set
  /// of stacks that receive a 0-bead when an i-tile is placed.
  std::vector<GenIndex> const& neighbours(GenIndex i) const {
    return impl_->adjacency[i];
  }

  /// Non-commuting pairs (i < j), sorted.
  std::vector<std::pair<GenIndex, GenIndex>> edges() const;

  /// Commuting pairs (i < j), sorted.
  std::vector<std::pair<GenIndex, GenIndex>> commuting_pairs() const;

  friend bool operator==(DefiningGraph const& a, DefiningGraph const& b);

 private:
  struct Impl {
    std::vector<std::string> names;
    std::vector<std::uint64_t> bits;  // row-major, `words_per_row` per row
    std::size_t words_per_row = 0;
    std::vector<std::vector<GenIndex>> adjacency;
  };

  explicit DefiningGraph(std::shared_ptr<Impl const> impl)
      : impl_(std::move(impl)) {}

  static DefiningGraph make(std::vector<std::string> names,
                            std::vector<std::vector<bool>> const& table);

  std::shared_ptr<Impl const> impl_;
};

}  // namespace raag
