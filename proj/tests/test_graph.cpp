#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "raag/error.hpp"
#include "raag/io.hpp"
#include "raag/support.hpp"

using namespace raag;
using namespace raag::testing;

TEST_CASE("build stores the complement of the commuting pairs") {
  auto g = example_graph();
  using P = std::pair<GenIndex, GenIndex>;
  CHECK(g.edges() == std::vector<P>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(g.commuting_pairs() == std::vector<P>{{0, 3}, {1, 2}, {1, 3}});

  CHECK(DefiningGraph::build({"a1"}, {}).edges().empty());
  CHECK(free_group(2).edges() == std::vector<P>{{0, 1}});
}

TEST_CASE("build rejects malformed presentations") {
  CHECK_THROWS_AS(DefiningGraph::build({"a", "a"}, {}), ParseError);
  CHECK_THROWS_AS(DefiningGraph::build({"a", "b"}, {{"a", "c"}}), ParseError);
  CHECK_THROWS_AS(DefiningGraph::build({"a", "b"}, {{"a", "a"}}), ParseError);
}

TEST_CASE("commutes") {
  auto g = example_graph();
  CHECK(g.commutes(1, 2));
  CHECK_FALSE(g.commutes(2, 3));
  for (GenIndex i = 0; i < 4; ++i) {
    CHECK_FALSE(g.commutes(i, i));
    for (GenIndex j = 0; j < 4; ++j) {
      CHECK(g.commutes(i, j) == g.commutes(j, i));
    }
  }
  CHECK_THROWS_AS(g.commutes(0, 4), std::out_of_range);
}

TEST_CASE("support graph components") {
  auto g = example_graph();
  auto split = support_graph(g, w(g, "a2 a3 a4^-1"));
  CHECK(split.components() ==
        std::vector<std::vector<GenIndex>>{{1}, {2, 3}});
  CHECK_FALSE(split.connected());

  auto empty = support_graph(g, Word{});
  CHECK(empty.empty());
  CHECK(empty.components().empty());

  auto whole = support_graph(g, w(g, "a1^-1 a2 a3 a1 a4^-1"));
  CHECK(whole.components() ==
        std::vector<std::vector<GenIndex>>{{0, 1, 2, 3}});
  CHECK(whole.eccentricity(0) == 2);
  CHECK(whole.eccentricity(3) == 3);
  CHECK(whole.eccentricity(1) == 3);
}

TEST_CASE("support graph ignores letter order") {
  auto g = example_graph();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word x = random_word(g, 6, rng);
    auto base = support_graph(g, x);
    std::shuffle(x.begin(), x.end(), rng);
    CHECK(support_graph(g, x) == base);
  }
}

TEST_CASE("parse and format words") {
  auto g = example_graph();
  Word x = w(g, kExampleWord);
  CHECK(x.size() == 12);
  CHECK(x.front() == neg(1));
  CHECK(x[1] == neg(1));
  CHECK(w(g, "").empty());
  CHECK(w(g, "a1^3") == Word{pos(0), pos(0), pos(0)});
  CHECK(w(g, "a1^+2") == Word{pos(0), pos(0)});

  CHECK(format_word(g, x) == kExampleWord);
  CHECK(format_word(g, w(g, "a2 a2 a1^-1"), WordStyle::expanded) ==
        "a2 a2 a1^-1");
  CHECK(format_word(g, Word{}).empty());

  CHECK_THROWS_AS(w(g, "b1"), ParseError);
  CHECK_THROWS_AS(w(g, "a1^"), ParseError);
  CHECK_THROWS_AS(w(g, "a1^x"), ParseError);
  CHECK_THROWS_AS(w(g, "a1^0"), ParseError);
}

TEST_CASE("format then parse is the identity on words") {
  auto g = example_graph();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Word x = random_word(g, trial % 13, rng);
    for (auto style : {WordStyle::collapsed, WordStyle::expanded}) {
      CHECK(parse_word(g, format_word(g, x, style)) == x);
    }
  }
}

TEST_CASE("presentation files") {
  auto g = parse_presentation(
      "# the example group\n"
      "gens a1 a2 a3 a4\n"
      "commute a1 a4   # a1 a4 = a4 a1\n"
      "commute a2 a3\n"
      "\n"
      "commute a2 a4\n");
  CHECK(g == example_graph());
  CHECK(parse_presentation(format_presentation(g)) == g);

  try {
    parse_presentation("gens a b\ncommute a c\n", "bad.grp");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.source() == "bad.grp");
    CHECK(e.line() == 2);
    CHECK(e.token() == "c");
  }
  CHECK_THROWS_AS(parse_presentation("commute a b\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a\ngens b\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a b\nrelate a b\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("# nothing\n"), ParseError);
}
