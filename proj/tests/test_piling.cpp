#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "raag/conjugacy.hpp"
#include "raag/error.hpp"
#include "raag/oracle.hpp"
#include "raag/piling.hpp"

using namespace raag;
using namespace raag::testing;

namespace {

std::vector<std::vector<Bead>> stacks_of(Piling const& p) {
  std::vector<std::vector<Bead>> out;
  for (GenIndex i = 0; i < p.stack_count(); ++i) {
    out.emplace_back(p.stack(i).begin(), p.stack(i).end());
  }
  return out;
}

Piling stack_product(Piling const& a, Piling const& b) {
  auto s = stacks_of(a);
  for (GenIndex i = 0; i < b.stack_count(); ++i) {
    s[i].insert(s[i].end(), b.stack(i).begin(), b.stack(i).end());
  }
  return Piling::from_stacks(a.graph(), s);
}

bool reducible(Piling const& p, GenIndex i) {
  return p.starts_signed(i) && p.ends_signed(i) &&
         p.stack(i).front() != p.stack(i).back();
}

// Cyclic reduction picking a random reducible stack at each step.
Piling random_cyclic_reduce(Piling p, std::mt19937_64& rng) {
  for (;;) {
    std::vector<GenIndex> candidates;
    for (GenIndex i = 0; i < p.stack_count(); ++i) {
      if (reducible(p, i)) candidates.push_back(i);
    }
    if (candidates.empty()) return p;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    GenIndex i = candidates[pick(rng)];
    p.pop_bottom(i);
    p.pop_top(i);
  }
}

Piling random_nonsplit_reduced(DefiningGraph const& g, std::mt19937_64& rng) {
  for (;;) {
    std::uniform_int_distribution<std::size_t> len(1, 16);
    auto p = cyclic_reduce(pi_star(g, random_word(g, len(rng), rng))).piling;
    if (!p.empty() && support_graph(p).connected()) return p;
  }
}

}  // namespace

TEST_CASE("push_letter places tiles and cancels") {
  auto g = example_graph();
  auto p = push_letter(Piling(g), neg(1));
  CHECK(p.debug_string() == "a1: 0\na2: -\na3:\na4:\n");

  auto q = pi_star(g, w(g, "a1 a3"));
  CHECK(q.debug_string() == "a1: +0\na2: 0\na3: 0+\na4: 0\n");
  q = push_letter(q, neg(2));
  q = push_letter(q, neg(0));
  CHECK(q.empty());
  CHECK(q == Piling(g));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    Word x = random_word(g, 10, rng);
    CHECK(pi_star(g, concat(x, inverse(x))) == Piling(g));
  }
}

TEST_CASE("pi_star of the example word") {
  auto g = example_graph();
  auto p = pi_star(g, w(g, kExampleWord));
  CHECK(p.signed_beads() == 8);
  CHECK(pi_star(g, Word{}).empty());

  auto reduced = w(g, "a1 a2 a1^-1 a3 a4^-1 a2");
  CHECK(pi_star(g, reduced).signed_beads() == reduced.size());
}

TEST_CASE("sigma_star") {
  auto g = example_graph();
  CHECK(format_word(g, sigma_star(pi_star(g, w(g, kExampleWord))),
                    WordStyle::expanded) ==
        "a4^-1 a3 a2^-1 a1 a2 a1^-1 a2 a2");
  CHECK(sigma_star(Piling(g)).empty());

  auto p = pi_star(g, w(g, "a1 a4"));
  CHECK(p.debug_string() == "a1: +\na2: 0\na3: 00\na4: +\n");
  CHECK(sigma_star(p) == w(g, "a4 a1"));
}

TEST_CASE("from_stacks accepts only realizable pilings") {
  auto g = example_graph();
  auto p = pi_star(g, w(g, kExampleWord));
  CHECK(Piling::from_stacks(g, stacks_of(p)) == p);

  CHECK_THROWS_AS(Piling::from_stacks(g, {{Bead::zero}, {}, {}, {}}),
                  PilingError);
  CHECK_THROWS_AS(Piling::from_stacks(g, {{Bead::plus}, {}, {}, {}}),
                  PilingError);
  // a1 then a1^-1 stacked without cancelling
  CHECK_THROWS_AS(
      Piling::from_stacks(g, {{Bead::plus, Bead::minus},
                              {Bead::zero, Bead::zero},
                              {Bead::zero, Bead::zero},
                              {}}),
      PilingError);
}

TEST_CASE("pi_star is constant on group elements") {
  std::mt19937_64 rng(2);
  for (auto const& g : {example_graph(), free_group(3), z2_free_z()}) {
    for (int trial = 0; trial < 300; ++trial) {
      Word x = random_word(g, 10, rng);
      Word y = random_rewrite(g, x, 12, rng);
      CHECK(pi_star(g, x) == pi_star(g, y));
    }
  }
}

TEST_CASE("round trip and normality of sigma_star") {
  std::mt19937_64 rng(3);
  for (auto const& g : {example_graph(), free_group(3), z2_free_z()}) {
    for (int trial = 0; trial < 300; ++trial) {
      Word x = random_word(g, 14, rng);
      auto p = pi_star(g, x);
      Word nf = sigma_star(p);
      CHECK(pi_star(g, nf) == p);
      CHECK(nf.size() <= x.size());
      CHECK(sigma_star(pi_star(g, nf)) == nf);
      CHECK(oracle::oracle_equal(g, nf, x,
                                 oracle::Limits{32, 2'000'000}));
    }
  }
}

TEST_CASE("word problem agrees with the oracle on all short words") {
  auto g = example_graph();
  std::size_t identities = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (auto const& x : all_words(g, n)) {
      bool const fast = pi_star(g, x).empty();
      bool const slow = oracle::oracle_identity(g, x);
      REQUIRE(fast == slow);
      identities += fast;
    }
  }
  CHECK(identities > 0);
}

TEST_CASE("cyclic_reduce") {
  auto g = example_graph();
  auto r = cyclic_reduce(pi_star(g, w(g, "a1^-1 a2 a3 a1 a4^-1")));
  CHECK(r.piling == pi_star(g, w(g, "a2 a3 a4^-1")));
  REQUIRE(r.events.size() == 1);
  CHECK(r.events[0].letter == neg(0));
  CHECK(r.events[0].kind == EventKind::cyclic_reduction);

  auto fixed = pi_star(g, w(g, "a1 a2 a1^-1 a3 a4^-1 a2"));
  auto again = cyclic_reduce(fixed);
  CHECK(again.piling == fixed);
  CHECK(again.events.empty());

  auto f2 = free_group(2);
  CHECK(cyclic_reduce(pi_star(f2, w(f2, "a1 a2 a1^-1"))).piling ==
        pi_star(f2, w(f2, "a2")));
}

TEST_CASE("cyclic reduction is idempotent and order independent") {
  std::mt19937_64 rng(4);
  for (auto const& g : {example_graph(), free_group(3), z2_free_z()}) {
    for (int trial = 0; trial < 300; ++trial) {
      auto p = pi_star(g, random_word(g, 12, rng));
      auto r = cyclic_reduce(p);
      CHECK(is_cyclically_reduced(r.piling));
      CHECK(cyclic_reduce(r.piling).events.empty());
      CHECK(random_cyclic_reduce(p, rng).signed_beads() ==
            r.piling.signed_beads());
      CHECK(p.signed_beads() - r.piling.signed_beads() ==
            2 * r.events.size());
    }
  }
}

TEST_CASE("decompose") {
  auto g = example_graph();
  CHECK_THROWS_AS(decompose(Piling(g)), PilingError);

  auto pyramid = pi_star(g, w(g, "a1 a2 a1^-1 a3 a4^-1 a2"));
  auto d = decompose(pyramid);
  CHECK(d.p0.empty());
  CHECK(d.p1 == pyramid);

  d = decompose(pi_star(g, w(g, "a4 a2")));
  CHECK(d.apex == 1);
  CHECK(d.p0 == pi_star(g, w(g, "a4")));
  CHECK(d.p1 == pi_star(g, w(g, "a2")));

  d = decompose(pi_star(g, w(g, "a3 a4")));
  CHECK(d.apex == 2);
  CHECK(d.p0.empty());
  CHECK(d.p1 == pi_star(g, w(g, "a3 a4")));
}

TEST_CASE("decompose splits sigma_star and the stacks") {
  std::mt19937_64 rng(5);
  for (auto const& g : {example_graph(), free_group(3), z2_free_z()}) {
    for (int trial = 0; trial < 300; ++trial) {
      auto p = pi_star(g, random_word(g, 12, rng));
      if (p.empty()) continue;
      auto d = decompose(p);
      CHECK(d.p0.signed_beads(d.apex) == 0);
      CHECK(is_pyramidal(d.p1));
      CHECK(*d.p1.lowest_signed() == d.apex);
      CHECK(stack_product(d.p0, d.p1) == p);
      CHECK(sigma_star(p) == concat(sigma_star(d.p0), sigma_star(d.p1)));
      CHECK(sigma_star(d.p0) == d.extracted);
    }
  }
}

TEST_CASE("any extraction order yields the same 0-factor") {
  std::mt19937_64 rng(6);
  auto g = example_graph();
  for (int trial = 0; trial < 300; ++trial) {
    auto p = pi_star(g, random_word(g, 12, rng));
    if (p.empty()) continue;
    auto d = decompose(p);
    Piling q = p;
    Piling p0(g);
    for (;;) {
      std::vector<GenIndex> candidates;
      for (GenIndex j = 0; j < g.size(); ++j) {
        if (j != d.apex && q.starts_signed(j)) candidates.push_back(j);
      }
      if (candidates.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      p0.push(q.pop_bottom(candidates[pick(rng)]));
    }
    CHECK(p0 == d.p0);
    CHECK(q == d.p1);
  }
}

TEST_CASE("cycle_bottom") {
  auto f2 = free_group(2);
  auto [cycled, event] = cycle_bottom(pi_star(f2, w(f2, "a1 a2")), 0);
  CHECK(cycled == pi_star(f2, w(f2, "a2 a1")));
  CHECK(event.letter == pos(0));
  CHECK_THROWS_AS(cycle_bottom(pi_star(f2, w(f2, "a1 a2")), 1), PilingError);

  auto g = example_graph();
  auto p = cyclic_reduce(pi_star(g, w(g, kExampleWord))).piling;
  Word nf = sigma_star(p);
  auto [q, e] = cycle_bottom(p, nf.front().gen);
  CHECK(q == pi_star(g, rotate_left(nf, 1)));
  CHECK(e.letter == nf.front());

  // Cycling every tile once, in extraction order, conserves beads.
  Piling r = p;
  for (Letter l : nf) {
    r = cycle_bottom(r, l.gen).first;
  }
  CHECK(r.signed_beads() == p.signed_beads());
  CHECK(r == p);
}

TEST_CASE("pyramidalize") {
  auto g = example_graph();
  auto pyramid = pi_star(g, w(g, "a1 a2 a1^-1 a3 a4^-1 a2"));
  auto same = pyramidalize(pyramid);
  CHECK(same.piling == pyramid);
  CHECK(same.events.empty());
  CHECK(same.iterations == 0);

  auto p = cyclic_reduce(pi_star(g, w(g, kExampleWord))).piling;
  CHECK_FALSE(is_pyramidal(p));
  auto out = pyramidalize(p);
  CHECK(is_pyramidal(out.piling));
  Word cnf = sigma_star(out.piling);
  CHECK(is_cyclic_normal(g, cnf));
  CHECK(oracle::oracle_conjugate(g, cnf, sigma_star(p)));

  CHECK_THROWS_AS(pyramidalize(Piling(g)), PilingError);
  CHECK_THROWS_AS(pyramidalize(pi_star(g, w(g, "a2 a3"))), PilingError);
  CHECK_THROWS_AS(pyramidalize(pi_star(g, w(g, "a1 a2 a1^-1"))),
                  PilingError);
}

TEST_CASE("pyramidalize on random non-split pilings") {
  std::mt19937_64 rng(8);
  for (auto const& g : {example_graph(), free_group(3), z2_free_z()}) {
    for (int trial = 0; trial < 500; ++trial) {
      auto p = random_nonsplit_reduced(g, rng);
      auto out = pyramidalize(p);
      auto const apex = *p.lowest_signed();
      CHECK(out.iterations <= support_graph(p).eccentricity(apex));
      REQUIRE(is_pyramidal(out.piling));
      CHECK(*out.piling.lowest_signed() == apex);
      for (GenIndex j = 0; j < g.size(); ++j) {
        auto s = out.piling.stack(j);
        CHECK((j == apex || s.empty() || s.front() == Bead::zero));
      }
      CHECK(is_cyclic_normal(g, sigma_star(out.piling)));

      // Replaying the log as bottom-tile cyclings reproduces the output.
      Piling replay = p;
      Word conj;
      for (auto const& e : out.events) {
        replay = cycle_bottom(replay, e.letter.gen).first;
        conj.push_back(e.letter);
      }
      CHECK(replay == out.piling);
      // ... and as conjugation of the input word.
      Word moved = concat(inverse(conj), concat(sigma_star(p), conj));
      CHECK(sigma_star(pi_star(g, moved)) == sigma_star(out.piling));
    }
  }
}

TEST_CASE("split_components") {
  auto g = example_graph();
  auto parts = split_components(pi_star(g, w(g, "a2 a3 a4^-1")));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == pi_star(g, w(g, "a2")));
  CHECK(parts[1] == pi_star(g, w(g, "a3 a4^-1")));

  auto whole = pi_star(g, w(g, "a1 a2 a1^-1 a3 a4^-1 a2"));
  CHECK(split_components(whole) == std::vector<Piling>{whole});
  CHECK(split_components(Piling(g)).empty());
}

TEST_CASE("split factors commute and multiply back") {
  std::mt19937_64 rng(9);
  for (auto const& g : {example_graph(), z2_free_z()}) {
    for (int trial = 0; trial < 300; ++trial) {
      auto p = cyclic_reduce(pi_star(g, random_word(g, 12, rng))).piling;
      auto parts = split_components(p);
      Word product;
      for (std::size_t a = 0; a < parts.size(); ++a) {
        CHECK(support_graph(parts[a]).connected());
        Word fa = sigma_star(parts[a]);
        product.insert(product.end(), fa.begin(), fa.end());
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
          for (Letter x : fa) {
            for (Letter y : sigma_star(parts[b])) {
              CHECK(g.commutes(x.gen, y.gen));
            }
          }
        }
      }
      CHECK(pi_star(g, product) == p);
    }
  }
}
