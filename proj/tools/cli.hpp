#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it with captured streams.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag::cli {

enum ExitCode : int { ok = 0, internal_error = 1, input_error = 2 };

/// `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

struct BenchRow {
  std::size_t n = 0;      // total length of the pair
  double seconds = 0.0;   // median over repetitions
};

/// Random freely reduced word, drawing letters by rejection.
Word random_reduced_word(DefiningGraph const& g, std::size_t length,
                         std::uint64_t seed);

/// Median time of conjugate_in_raag on (w, rotation of w) with |w| = n/2.
std::vector<BenchRow> bench_conjugacy(DefiningGraph const& g,
                                      std::vector<std::size_t> const& sizes,
                                      std::size_t reps, std::uint64_t seed);

/// Same, on caller-supplied words; n is twice the word length.
std::vector<BenchRow> bench_conjugacy(DefiningGraph const& g,
                                      std::vector<Word> const& words,
                                      std::size_t reps);

/// The four-generator presentation used when bench gets no -g.
DefiningGraph default_bench_graph();

}  // namespace raag::cli
