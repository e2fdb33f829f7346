#include "raag/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "raag/error.hpp"

namespace raag {

DefiningGraph::DefiningGraph() : impl_(std::make_shared<Impl const>()) {}

DefiningGraph DefiningGraph::make(std::vector<std::string> names,
                                  std::vector<std::vector<bool>> const& table) {
  auto impl = std::make_shared<Impl>();
  std::size_t const n = names.size();
  impl->names = std::move(names);
  impl->words_per_row = (n + 63) / 64;
  impl->bits.assign(n * impl->words_per_row, 0);
  impl->adjacency.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j]) {
        impl->bits[i * impl->words_per_row + j / 64] |= std::uint64_t{1}
                                                        << (j % 64);
        impl->adjacency[i].push_back(j);
      }
    }
  }
  return DefiningGraph(std::move(impl));
}

DefiningGraph DefiningGraph::build(
    std::vector<std::string> names,
    std::vector<std::pair<std::string, std::string>> const& commuting_pairs) {
  std::unordered_map<std::string, GenIndex> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw ParseError("", 0, "", "empty generator name");
    }
    if (!index.emplace(names[i], i).second) {
      throw ParseError("", 0, names[i], "duplicate generator name");
    }
  }
  std::size_t const n = names.size();
  std::vector<std::vector<bool>> table(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i) {
    table[i][i] = false;
  }
  for (auto const& [x, y] : commuting_pairs) {
    auto ix = index.find(x);
    if (ix == index.end()) {
      throw ParseError("", 0, x, "unknown generator in commuting pair");
    }
    auto iy = index.find(y);
    if (iy == index.end()) {
      throw ParseError("", 0, y, "unknown generator in commuting pair");
    }
    if (ix->second == iy->second) {
      throw ParseError("", 0, x, "generator paired with itself");
    }
    table[ix->second][iy->second] = false;
    table[iy->second][ix->second] = false;
  }
  return make(std::move(names), table);
}

DefiningGraph DefiningGraph::from_noncommuting(
    std::vector<std::string> names,
    std::vector<std::pair<GenIndex, GenIndex>> const& noncommuting_pairs) {
  std::size_t const n = names.size();
  std::vector<std::vector<bool>> table(n, std::vector<bool>(n, false));
  for (auto [i, j] : noncommuting_pairs) {
    if (i >= n || j >= n) {
      throw std::out_of_range("generator index out of range");
    }
    if (i == j) {
      throw std::invalid_argument("non-commutation graph must be irreflexive");
    }
    table[i][j] = table[j][i] = true;
  }
  return make(std::move(names), table);
}

DefiningGraph DefiningGraph::free_group(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("a" + std::to_string(i + 1));
  }
  return build(std::move(names), {});
}

std::string const& DefiningGraph::name(GenIndex i) const {
  return impl_->names.at(i);
}

std::optional<GenIndex> DefiningGraph::find(std::string_view name) const {
  auto const& names = impl_->names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    return std::nullopt;
  }
  return static_cast<GenIndex>(it - names.begin());
}

bool DefiningGraph::noncommute(GenIndex i, GenIndex j) const {
  if (i >= size() || j >= size()) {
    throw std::out_of_range("generator index out of range");
  }
  return (impl_->bits[i * impl_->words_per_row + j / 64] >> (j % 64)) & 1u;
}

bool DefiningGraph::commutes(GenIndex i, GenIndex j) const {
  return !noncommute(i, j) && i != j;
}

std::vector<std::pair<GenIndex, GenIndex>> DefiningGraph::edges() const {
  std::vector<std::pair<GenIndex, GenIndex>> out;
  for (GenIndex i = 0; i < size(); ++i) {
    for (GenIndex j : impl_->adjacency[i]) {
      if (i < j) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::vector<std::pair<GenIndex, GenIndex>> DefiningGraph::commuting_pairs()
    const {
  std::vector<std::pair<GenIndex, GenIndex>> out;
  for (GenIndex i = 0; i < size(); ++i) {
    for (GenIndex j = i + 1; j < size(); ++j) {
      if (commutes(i, j)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

bool operator==(DefiningGraph const& a, DefiningGraph const& b) {
  return a.impl_ == b.impl_ ||
         (a.impl_->names == b.impl_->names && a.impl_->bits == b.impl_->bits);
}

}  // namespace raag
