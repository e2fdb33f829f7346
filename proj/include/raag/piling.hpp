#pragma once

// Pilings: N stacks of beads over {+, -, 0}, one stack per generator.
//
// Placing a letter a_i^e puts a signed bead on stack i and a 0-bead on every
// stack j that does not commute with i; that set of beads is the a_i-tile.
// Tiles are never stored: the footprint of a tile is recomputed from the
// defining graph. A Piling is only ever produced by pushing letters (or by
// from_stacks, which checks realizability), so every value of the type is
// in the image of pi_star.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/support.hpp"
#include "raag/word.hpp"

namespace raag {

enum class Bead : std::uint8_t { zero, plus, minus };

inline constexpr Bead bead_of(int sign) noexcept {
  return sign > 0 ? Bead::plus : Bead::minus;
}

/// One column of a piling; bottom is the front.
class Stack {
 public:
  bool empty() const noexcept { return head_ == beads_.size(); }
  std::size_t size() const noexcept { return beads_.size() - head_; }
  Bead front() const noexcept { return beads_[head_]; }
  Bead back() const noexcept { return beads_.back(); }
  void push_back(Bead b) { beads_.push_back(b); }
  void pop_back() noexcept { beads_.pop_back(); }
  void pop_front();
  std::span<Bead const> beads() const noexcept {
    return std::span<Bead const>(beads_).subspan(head_);
  }

  friend bool operator==(Stack const& a, Stack const& b);

 private:
  std::vector<Bead> beads_;
  std::size_t head_ = 0;
};

enum class EventKind : std::uint8_t {
  cycling,           // bottom tile moved to the top
  cyclic_reduction,  // bottom tile and the opposite top tile removed
};

/// One base-moving step. Both kinds act on the underlying cyclic word as
/// "conjugate by `letter`": w ~ letter^-1 w letter.
struct CyclingEvent {
  Letter letter;
  EventKind kind = EventKind::cycling;
  /// Index of the factor the event concerns; empty for cyclic reductions
  /// performed before factorization.
  std::optional<std::size_t> factor;

  friend bool operator==(CyclingEvent const&, CyclingEvent const&) = default;
};

class Piling {
 public:
  explicit Piling(DefiningGraph g);

  /// Accepts an abstract piling only if it is realizable. Throws PilingError.
  static Piling from_stacks(DefiningGraph g,
                            std::vector<std::vector<Bead>> const& stacks);

  DefiningGraph const& graph() const noexcept { return graph_; }
  std::size_t stack_count() const noexcept { return stacks_.size(); }
  std::span<Bead const> stack(GenIndex i) const {
    return stacks_.at(i).beads();
  }

  /// Number of +/- beads; equals the length of sigma_star of the piling.
  std::size_t signed_beads() const noexcept { return signed_total_; }
  std::size_t signed_beads(GenIndex i) const noexcept {
    return signed_count_[i];
  }
  bool empty() const noexcept { return signed_total_ == 0; }

  bool starts_signed(GenIndex i) const noexcept {
    return !stacks_[i].empty() && stacks_[i].front() != Bead::zero;
  }
  bool ends_signed(GenIndex i) const noexcept {
    return !stacks_[i].empty() && stacks_[i].back() != Bead::zero;
  }

  /// Appends a letter on top, cancelling against an opposite top bead.
  void push(Letter l);

  /// Removes the bottom i-tile and returns its letter. Throws PilingError if
  /// stack i does not start with a signed bead.
  Letter pop_bottom(GenIndex i);

  /// Removes the top i-tile and returns its letter. Throws PilingError if
  /// stack i does not end with a signed bead.
  Letter pop_top(GenIndex i);

  /// Smallest generator whose stack holds a signed bead.
  std::optional<GenIndex> lowest_signed() const noexcept;

  /// Debug serialization: one line per stack, `name: ` then beads bottom to
  /// top written as `+`, `-`, `0`.
  std::string debug_string() const;

  friend bool operator==(Piling const& a, Piling const& b);

 private:
  DefiningGraph graph_;
  std::vector<Stack> stacks_;
  std::vector<std::size_t> signed_count_;
  std::size_t signed_total_ = 0;
};

Piling push_letter(Piling p, Letter l);

/// Piling of a word: left fold of push_letter from the empty piling.
Piling pi_star(DefiningGraph const& g, std::span<Letter const> w);

/// Normal word of a piling: repeatedly extract the bottom tile of the
/// largest generator whose stack starts with a signed bead.
Word sigma_star(Piling p);

bool is_cyclically_reduced(Piling const& p);

/// Support graph of the generators with a signed bead.
SupportGraph support_graph(Piling const& p);

struct CyclicReduction {
  Piling piling;
  std::vector<CyclingEvent> events;
};

CyclicReduction cyclic_reduce(Piling p);

/// The p0 . p1 split: p1 is pyramidal with apex `apex`, p0 holds no apex
/// bead. `extracted` lists the tiles of p0 in extraction order, so that
/// p0 == pi_star(extracted) and sigma_star(p0) == extracted.
struct Decomposition {
  Piling p0;
  Piling p1;
  GenIndex apex = 0;
  Word extracted;
};

/// Throws PilingError on the empty piling.
Decomposition decompose(Piling p);

/// Moves the bottom i-tile to the top (a cycling of the underlying word).
/// Throws PilingError if stack i does not start with a signed bead.
std::pair<Piling, CyclingEvent> cycle_bottom(Piling p, GenIndex i);

bool is_pyramidal(Piling const& p);

struct Pyramidalization {
  Piling piling;
  std::vector<CyclingEvent> events;
  std::size_t iterations = 0;  // rounds with a nonempty 0-factor
};

/// Cycles 0-factors to the top until the piling is pyramidal. The input must
/// be nonempty, cyclically reduced and non-split; PilingError otherwise.
Pyramidalization pyramidalize(Piling p);

/// One piling per connected component of the support graph, ordered by the
/// component's smallest generator.
std::vector<Piling> split_components(Piling const& p);

}  // namespace raag
