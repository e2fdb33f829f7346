#pragma once

#include <random>
#include <string>
#include <vector>

#include "raag/cube_complex.hpp"
#include "raag/graph.hpp"
#include "raag/io.hpp"
#include "raag/word.hpp"

namespace raag::testing {

// <a1..a4 | a1a4 = a4a1, a2a3 = a3a2, a2a4 = a4a2>
inline DefiningGraph example_graph() {
  return DefiningGraph::build({"a1", "a2", "a3", "a4"},
                              {{"a1", "a4"}, {"a2", "a3"}, {"a2", "a4"}});
}

inline DefiningGraph free_group(std::size_t n) {
  return DefiningGraph::free_group(n);
}

inline DefiningGraph z2() {
  return DefiningGraph::build({"a1", "a2"}, {{"a1", "a2"}});
}

// Z^2 * Z: a1 and a2 commute, a3 commutes with neither.
inline DefiningGraph z2_free_z() {
  return DefiningGraph::build({"a1", "a2", "a3"}, {{"a1", "a2"}});
}

inline Word w(DefiningGraph const& g, std::string const& text) {
  return parse_word(g, text);
}

inline constexpr char const* kExampleWord =
    "a2^-2 a4^-1 a3 a2 a4 a1 a2 a1^-1 a2^2 a4^-1";

// Two vertices over F_2: an a1-loop at each vertex and an a2-edge between.
inline char const* const kCounterexample = R"(
vertices x1 x2
edge e1 x1 x1 a1
edge e2 x1 x2 a2
edge e3 x2 x2 a1
)";

// The Salvetti complex of Z^2 mapped to itself.
inline char const* const kTorus = R"(
vertices x
edge e1 x x a1
edge e2 x x a2
square e1 e2 e1 e2
)";

// The 2x2 cover of the torus: vertex (i,j) = x<i><j>.
inline char const* const kTorusCover = R"(
vertices x00 x10 x01 x11
edge h00 x00 x10 a1
edge h10 x10 x00 a1
edge h01 x01 x11 a1
edge h11 x11 x01 a1
edge v00 x00 x01 a2
edge v10 x10 x11 a2
edge v01 x01 x00 a2
edge v11 x11 x10 a2
square h00 v10 h01 v00
square h10 v00 h11 v10
square h01 v11 h00 v01
square h11 v01 h10 v11
)";

// Over Z^2 * Z: a torus at x1, an a3-edge to x2 carrying an a1-loop, an
// a3-edge on to x3 carrying an a2-loop.
inline char const* const kTorusWithTails = R"(
vertices x1 x2 x3
edge t1 x1 x1 a1
edge t2 x1 x1 a2
edge c1 x1 x2 a3
edge l2 x2 x2 a1
edge c2 x2 x3 a3
edge l3 x3 x3 a2
square t1 t2 t1 t2
)";

inline CubeComplexMap counterexample() {
  return parse_complex(kCounterexample, free_group(2), "counterexample");
}
inline CubeComplexMap torus() {
  return parse_complex(kTorus, z2(), "torus");
}
inline CubeComplexMap torus_cover() {
  return parse_complex(kTorusCover, z2(), "torus-cover");
}
inline CubeComplexMap torus_with_tails() {
  return parse_complex(kTorusWithTails, z2_free_z(), "torus-with-tails");
}

inline Letter random_letter(DefiningGraph const& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<GenIndex> gen(0, g.size() - 1);
  std::bernoulli_distribution sign(0.5);
  return Letter{gen(rng), sign(rng) ? 1 : -1};
}

inline Word random_word(DefiningGraph const& g, std::size_t length,
                        std::mt19937_64& rng) {
  Word out;
  for (std::size_t k = 0; k < length; ++k) {
    out.push_back(random_letter(g, rng));
  }
  return out;
}

// Freely reduced (no adjacent inverse pair), by rejection.
inline Word random_freely_reduced(DefiningGraph const& g, std::size_t length,
                                  std::mt19937_64& rng) {
  Word out;
  while (out.size() < length) {
    Letter l = random_letter(g, rng);
    if (out.empty() || !(out.back() == l.inverse())) {
      out.push_back(l);
    }
  }
  return out;
}

// A random word equal to `w` in the group: commutation swaps and
// insertions/deletions of inverse pairs.
inline Word random_rewrite(DefiningGraph const& g, Word w, std::size_t steps,
                           std::mt19937_64& rng) {
  for (std::size_t s = 0; s < steps; ++s) {
    std::uniform_int_distribution<int> kind(0, 2);
    switch (kind(rng)) {
      case 0: {
        if (w.size() < 2) break;
        std::uniform_int_distribution<std::size_t> at(0, w.size() - 2);
        std::size_t k = at(rng);
        if (g.commutes(w[k].gen, w[k + 1].gen)) std::swap(w[k], w[k + 1]);
        break;
      }
      case 1: {
        std::uniform_int_distribution<std::size_t> at(0, w.size());
        Letter l = random_letter(g, rng);
        auto it = w.begin() + static_cast<std::ptrdiff_t>(at(rng));
        it = w.insert(it, l.inverse());
        w.insert(it, l);
        break;
      }
      default: {
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
          if (w[k + 1] == w[k].inverse()) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(k),
                    w.begin() + static_cast<std::ptrdiff_t>(k + 2));
            break;
          }
        }
        break;
      }
    }
  }
  return w;
}

// All words of length exactly n over the 2N letters.
inline std::vector<Word> all_words(DefiningGraph const& g, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Word> next;
    for (auto const& prefix : out) {
      for (GenIndex i = 0; i < g.size(); ++i) {
        for (int s : {1, -1}) {
          Word x = prefix;
          x.push_back(Letter{i, s});
          next.push_back(std::move(x));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

// Freely reduced loops of length <= max_len at every vertex.
inline std::vector<BasedWord> all_loops(CubeComplexMap const& cx,
                                        std::size_t max_len) {
  std::vector<BasedWord> loops;
  struct Partial {
    VertexId base;
    VertexId at;
    Word word;
  };
  std::vector<Partial> layer;
  for (VertexId v = 0; v < cx.vertex_count(); ++v) {
    layer.push_back({v, v, {}});
  }
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<Partial> next;
    for (auto const& p : layer) {
      if (p.at == p.base) {
        loops.push_back(BasedWord{p.base, p.word, p.base});
      }
      if (len == max_len) continue;
      for (GenIndex i = 0; i < cx.graph().size(); ++i) {
        for (int s : {1, -1}) {
          Letter l{i, s};
          if (!p.word.empty() && p.word.back() == l.inverse()) continue;
          if (auto y = cx.step(p.at, l)) {
            Word x = p.word;
            x.push_back(l);
            next.push_back({p.base, *y, std::move(x)});
          }
        }
      }
    }
    layer = std::move(next);
  }
  return loops;
}

}  // namespace raag::testing
