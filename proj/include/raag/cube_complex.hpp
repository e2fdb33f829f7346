#pragma once

// A cubical map X -> Y into the Salvetti complex of a RAAG, recorded as the
// vertices of X, its edges labelled by generators (orientation pulled back
// from Y), and optionally its squares.
//
// Edge paths in X are coded as based words: a start vertex plus the word
// read along the path. Determinism of the labelling makes this coding
// unique, and the transition table `step` is built once at construction.
//
// Text format:
//   # comment
//   vertices x1 x2
//   edge e1 x1 x1 a1
//   edge e2 x1 x2 a2
//   square e1 e2 e3 e4      (boundary order; orientations are inferred)

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raag/centralizer.hpp"
#include "raag/conjugacy.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

using VertexId = std::size_t;

struct Edge {
  std::string id;
  VertexId src = 0;
  VertexId dst = 0;
  GenIndex label = 0;
};

/// A square given by four edge indices in boundary order. If `consistent`,
/// the boundary reads l1 l2 l1^-1 l2^-1 from `corner`, where
/// l1 = first_letter and l2 = second_letter.
struct Square {
  std::array<std::size_t, 4> edges{};
  bool consistent = false;
  VertexId corner = 0;
  Letter first_letter;
  Letter second_letter;
  std::string problem;  // why the square is inconsistent
};

class CubeComplexMap {
 public:
  /// Throws ComplexError if an edge or square references a vertex or edge
  /// that does not exist. Non-determinism, bad labels and malformed squares
  /// are accepted here and reported by validate().
  CubeComplexMap(DefiningGraph g, std::vector<std::string> vertex_names,
                 std::vector<Edge> edges,
                 std::vector<std::array<std::size_t, 4>> squares = {});

  DefiningGraph const& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::string const& vertex_name(VertexId v) const {
    return vertex_names_.at(v);
  }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::vector<Edge> const& edges() const noexcept { return edges_; }
  std::vector<Square> const& squares() const noexcept { return squares_; }
  bool has_squares() const noexcept { return !squares_.empty(); }

  /// Endpoint of the unique edge leaving `x` with letter `l`.
  std::optional<VertexId> step(VertexId x, Letter l) const;

  bool deterministic() const noexcept { return conflicts_.empty(); }

  /// (vertex, letter) slots claimed by more than one edge.
  struct Conflict {
    VertexId vertex;
    Letter letter;
    std::size_t first_edge;
    std::size_t second_edge;
  };
  std::vector<Conflict> const& conflicts() const noexcept {
    return conflicts_;
  }

 private:
  std::size_t slot(VertexId x, Letter l) const noexcept {
    return (x * graph_.size() + l.gen) * 2 + (l.sign > 0 ? 0 : 1);
  }
  void infer_square(Square& sq) const;

  DefiningGraph graph_;
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<Square> squares_;
  std::vector<std::optional<VertexId>> table_;
  std::vector<Conflict> conflicts_;
};

CubeComplexMap parse_complex(std::string_view text, DefiningGraph const& g,
                             std::string const& source = "");
CubeComplexMap load_complex(std::string const& path, DefiningGraph const& g);

enum class ConvexityStatus { verified, violated, not_checked };

struct ValidationReport {
  bool deterministic = true;
  bool labels_valid = true;
  bool squares_consistent = true;
  ConvexityStatus convexity = ConvexityStatus::not_checked;
  std::vector<std::string> violations;
  /// Hypotheses that are assumed rather than checked.
  std::vector<std::string> assumed;

  bool ok() const noexcept {
    return deterministic && labels_valid && squares_consistent &&
           convexity != ConvexityStatus::violated;
  }
};

ValidationReport validate(CubeComplexMap const& cx);

/// End vertex of the path reading `w` from `x`, or nullopt at the first
/// missing edge.
std::optional<VertexId> trace(CubeComplexMap const& cx, VertexId x,
                              std::span<Letter const> w);

struct BasedWord {
  VertexId base = 0;
  Word word;
  VertexId end = 0;

  bool is_loop() const noexcept { return base == end; }
  friend bool operator==(BasedWord const&, BasedWord const&) = default;
};

/// Throws ComplexError if `w` cannot be traced from `base`.
BasedWord make_based_word(CubeComplexMap const& cx, VertexId base, Word w);

/// Parses `<vertex>: <word>`. Throws ParseError.
BasedWord parse_based_word(CubeComplexMap const& cx, std::string_view text);
std::string format_based_word(CubeComplexMap const& cx, BasedWord const& bw,
                              WordStyle style = WordStyle::expanded);

/// Moves the base one edge along the loop and rotates the word by one.
/// Throws ComplexError if `bw` is not a nonempty loop.
BasedWord based_cycle(CubeComplexMap const& cx, BasedWord const& bw);

struct NormalizedLoop {
  VertexId base = 0;
  CyclicNormalFactors factors;
};

/// Brings a loop to mutually commuting cyclic normal forms, carrying the
/// base vertex along every cycling. Throws ComplexError if an event cannot
/// be followed from the current base.
NormalizedLoop normalize_based(CubeComplexMap const& cx, BasedWord const& bw);

/// Vertices reachable from `start` by tracing centralizer generators and
/// their inverses, in increasing order.
std::vector<VertexId> reach_by_centralizer(CubeComplexMap const& cx,
                                           VertexId start,
                                           CentralizerGens const& gens);

/// Literal search over preferred-form words z_1^p_1 ... z_k^p_k zeta with
/// norm at most `max_norm`, traced from `start`; true iff one ends at
/// `target`.
bool preferred_form_search(CubeComplexMap const& cx, VertexId start,
                           VertexId target, CentralizerGens const& gens,
                           std::size_t max_norm);

enum class ConjugatorSearch { reachability, enumeration };

struct GroupoidCertificate {
  bool conjugate = false;
  std::string reason;
  NormalizedLoop first;
  NormalizedLoop second;
  std::vector<std::size_t> shifts;
  std::optional<VertexId> aligned_base;  // base of the first loop after
                                         // alignment with the second
  CentralizerGens centralizer;
  std::vector<VertexId> reachable;  // empty under enumeration
};

/// Decides whether two loops are freely homotopic in X. Throws ComplexError
/// if the complex is not deterministic or an input is not a loop.
GroupoidCertificate decide_groupoid_conjugacy(
    CubeComplexMap const& cx, BasedWord const& first, BasedWord const& second,
    ConjugatorSearch search = ConjugatorSearch::reachability);

bool groupoid_conjugate(CubeComplexMap const& cx, BasedWord const& first,
                        BasedWord const& second);

}  // namespace raag
