#include "raag/support.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace raag {

SupportGraph::SupportGraph(DefiningGraph const& g,
                           std::vector<GenIndex> vertices)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
  std::size_t const m = vertices_.size();
  local_adjacency_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (g.noncommute(vertices_[a], vertices_[b])) {
        local_adjacency_[a].push_back(b);
        local_adjacency_[b].push_back(a);
      }
    }
  }
  // Scanning start vertices in increasing order yields components already
  // ordered by their smallest generator.
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  component_index_.assign(m, unset);
  for (std::size_t start = 0; start < m; ++start) {
    if (component_index_[start] != unset) {
      continue;
    }
    std::size_t const c = components_.size();
    components_.emplace_back();
    std::vector<std::size_t> todo{start};
    component_index_[start] = c;
    while (!todo.empty()) {
      std::size_t v = todo.back();
      todo.pop_back();
      components_[c].push_back(vertices_[v]);
      for (std::size_t u : local_adjacency_[v]) {
        if (component_index_[u] == unset) {
          component_index_[u] = c;
          todo.push_back(u);
        }
      }
    }
    std::sort(components_[c].begin(), components_[c].end());
  }
}

std::size_t SupportGraph::component_of(GenIndex gen) const noexcept {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), gen);
  if (it == vertices_.end() || *it != gen) {
    return components_.size();
  }
  return component_index_[static_cast<std::size_t>(it - vertices_.begin())];
}

std::size_t SupportGraph::eccentricity(GenIndex source) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), source);
  if (it == vertices_.end() || *it != source) {
    throw std::out_of_range("eccentricity: generator not in support");
  }
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(vertices_.size(), unset);
  std::deque<std::size_t> queue{
      static_cast<std::size_t>(it - vertices_.begin())};
  dist[queue.front()] = 0;
  std::size_t best = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    best = std::max(best, dist[v]);
    for (std::size_t u : local_adjacency_[v]) {
      if (dist[u] == unset) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return best;
}

SupportGraph support_graph(DefiningGraph const& g, std::span<Letter const> w) {
  std::vector<bool> seen(g.size(), false);
  std::vector<GenIndex> vertices;
  for (auto const& l : w) {
    if (!seen[l.gen]) {
      seen[l.gen] = true;
      vertices.push_back(l.gen);
    }
  }
  return SupportGraph(g, std::move(vertices));
}

}  // namespace raag
