#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

/// The full subgraph of the non-commutation graph spanned by a set of
/// generators, with its connected components.
///
/// Each component is sorted increasingly; components are ordered by their
/// smallest generator.
class SupportGraph {
 public:
  SupportGraph() = default;
  SupportGraph(DefiningGraph const& g, std::vector<GenIndex> vertices);

  std::vector<GenIndex> const& vertices() const noexcept { return vertices_; }
  std::vector<std::vector<GenIndex>> const& components() const noexcept {
    return components_;
  }
  bool connected() const noexcept { return components_.size() == 1; }
  bool empty() const noexcept { return vertices_.empty(); }

  /// Index of the component holding `gen`, or components().size() if `gen`
  /// is not a vertex.
  std::size_t component_of(GenIndex gen) const noexcept;

  /// Largest graph distance from `source` to a vertex of its component.
  std::size_t eccentricity(GenIndex source) const;

  friend bool operator==(SupportGraph const&, SupportGraph const&) = default;

 private:
  std::vector<GenIndex> vertices_;
  std::vector<std::vector<GenIndex>> components_;
  std::vector<std::vector<GenIndex>> local_adjacency_;  // by vertex position
  std::vector<std::size_t> component_index_;            // by vertex position
};

/// Support graph of the generators occurring in `w`.
SupportGraph support_graph(DefiningGraph const& g, std::span<Letter const> w);

}  // namespace raag
