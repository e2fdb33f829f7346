#include "raag/centralizer.hpp"

#include <stdexcept>

#include "raag/error.hpp"
#include "raag/match.hpp"

namespace raag {

std::vector<Word> CentralizerGens::words() const {
  std::vector<Word> out;
  out.reserve(roots.size() + link_gens.size());
  for (auto const& r : roots) {
    out.push_back(r.word);
  }
  for (GenIndex i : link_gens) {
    out.push_back(Word{pos(i)});
  }
  return out;
}

Root minimal_root(std::span<Letter const> w) {
  if (w.empty()) {
    throw PilingError("minimal_root: empty factor");
  }
  std::size_t const n = w.size();
  Word doubled = concat(w.subspan(1), w);
  // The occurrence at position n - 1 always exists, so t <= n.
  std::size_t const t = *find_first(doubled, w) + 1;
  if (n % t != 0) {
    throw std::logic_error("minimal_root: period does not divide the length");
  }
  return Root{Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t)),
              n / t};
}

CentralizerGens centralizer_generators(DefiningGraph const& g,
                                       CyclicNormalFactors const& factors) {
  CentralizerGens out;
  std::vector<bool> in_support(g.size(), false);
  for (auto const& f : factors.factors) {
    out.roots.push_back(minimal_root(f));
    for (auto const& l : f) {
      in_support[l.gen] = true;
    }
  }
  for (GenIndex c = 0; c < g.size(); ++c) {
    if (in_support[c]) {
      continue;
    }
    bool commutes_with_all = true;
    for (GenIndex s = 0; s < g.size() && commutes_with_all; ++s) {
      if (in_support[s] && !g.commutes(c, s)) {
        commutes_with_all = false;
      }
    }
    if (commutes_with_all) {
      out.link_gens.push_back(c);
    }
  }
  return out;
}

}  // namespace raag
