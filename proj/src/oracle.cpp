#include "raag/oracle.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>

namespace raag::oracle {

namespace {

void check_length(std::size_t n, Limits const& limits) {
  if (n > limits.max_length) {
    throw BoundExceeded("oracle input length " + std::to_string(n) +
                        " exceeds bound " +
                        std::to_string(limits.max_length));
  }
}

void check_closure(WordSet const& set, Limits const& limits) {
  if (set.size() > limits.max_closure) {
    throw BoundExceeded("oracle closure exceeds " +
                        std::to_string(limits.max_closure) + " words");
  }
}

// Single-step neighbours under adjacent commutation swaps.
template <typename Visit>
void for_each_swap(DefiningGraph const& g, Word const& w, Visit visit) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (g.commutes(w[k].gen, w[k + 1].gen)) {
      Word next = w;
      std::swap(next[k], next[k + 1]);
      visit(std::move(next));
    }
  }
}

}  // namespace

Word reduce(DefiningGraph const& g, std::span<Letter const> w) {
  Word cur(w.begin(), w.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[j] == cur[i].inverse()) {
          cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j));
          cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!g.commutes(cur[i].gen, cur[j].gen)) {
          break;
        }
      }
    }
  }
  return cur;
}

WordSet commutation_closure(DefiningGraph const& g, std::span<Letter const> w,
                            Limits const& limits) {
  WordSet seen;
  std::deque<Word> queue;
  seen.insert(Word(w.begin(), w.end()));
  queue.emplace_back(w.begin(), w.end());
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for_each_swap(g, cur, [&](Word next) {
      if (seen.insert(next)) {
        queue.push_back(std::move(next));
      }
    });
    check_closure(seen, limits);
  }
  return seen;
}

Word commutation_min(DefiningGraph const& g, std::span<Letter const> w) {
  auto less = [](Letter a, Letter b) {
    return a.gen != b.gen ? a.gen < b.gen : a.sign > b.sign;
  };
  Word rest(w.begin(), w.end());
  Word out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // Letters that can be swapped to the front; take the smallest.
    std::size_t best = 0;
    for (std::size_t k = 1; k < rest.size(); ++k) {
      bool movable = true;
      for (std::size_t j = 0; j < k && movable; ++j) {
        movable = g.commutes(rest[j].gen, rest[k].gen);
      }
      if (movable && less(rest[k], rest[best])) {
        best = k;
      }
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

bool oracle_equal(DefiningGraph const& g, std::span<Letter const> w,
                  std::span<Letter const> v, Limits const& limits) {
  check_length(w.size() + v.size(), limits);
  Word const a = reduce(g, w);
  Word const b = reduce(g, v);
  if (a.size() != b.size()) {
    return false;
  }
  return commutation_min(g, a) == commutation_min(g, b);
}

bool oracle_identity(DefiningGraph const& g, std::span<Letter const> w,
                     Limits const& limits) {
  check_length(w.size(), limits);
  return reduce(g, w).empty();
}

Word cyclically_reduce(DefiningGraph const& g, std::span<Letter const> w,
                       Limits const& limits) {
  Word cur = reduce(g, w);
  for (;;) {
    WordSet seen;
    std::deque<Word> queue;
    seen.insert(cur);
    queue.push_back(cur);
    std::optional<Word> shorter;
    while (!queue.empty() && !shorter) {
      Word m = std::move(queue.front());
      queue.pop_front();
      Word r = reduce(g, m);
      if (r.size() < m.size()) {
        shorter = std::move(r);
        break;
      }
      if (m.size() >= 2 && m.front() == m.back().inverse()) {
        shorter = reduce(g, std::span<Letter const>(m).subspan(1, m.size() - 2));
        break;
      }
      auto visit = [&](Word next) {
        if (seen.insert(next)) {
          queue.push_back(std::move(next));
        }
      };
      for_each_swap(g, m, visit);
      if (!m.empty()) {
        visit(rotate_left(m, 1));
      }
      check_closure(seen, limits);
    }
    if (!shorter) {
      return cur;
    }
    cur = std::move(*shorter);
  }
}

Word conjugacy_key(DefiningGraph const& g, std::span<Letter const> w,
                   Limits const& limits) {
  check_length(w.size(), limits);
  Word const a = cyclically_reduce(g, w, limits);
  WordSet seen;
  std::deque<Word> queue;
  seen.insert(a);
  queue.push_back(a);
  Word best = a;
  auto less = [](Word const& x, Word const& y) {
    return std::lexicographical_compare(
        x.begin(), x.end(), y.begin(), y.end(), [](Letter p, Letter q) {
          return p.gen != q.gen ? p.gen < q.gen : p.sign > q.sign;
        });
  };
  while (!queue.empty()) {
    Word m = std::move(queue.front());
    queue.pop_front();
    if (less(m, best)) {
      best = m;
    }
    auto visit = [&](Word next) {
      if (seen.insert(next)) {
        queue.push_back(std::move(next));
      }
    };
    for_each_swap(g, m, visit);
    if (!m.empty()) {
      visit(rotate_left(m, 1));
    }
    check_closure(seen, limits);
  }
  return best;
}

bool oracle_conjugate(DefiningGraph const& g, std::span<Letter const> w,
                      std::span<Letter const> v, Limits const& limits) {
  check_length(w.size() + v.size(), limits);
  Word const a = cyclically_reduce(g, w, limits);
  Word const b = cyclically_reduce(g, v, limits);
  if (a.size() != b.size()) {
    return false;
  }
  WordSet seen;
  std::deque<Word> queue;
  seen.insert(a);
  queue.push_back(a);
  while (!queue.empty()) {
    Word m = std::move(queue.front());
    queue.pop_front();
    if (m == b) {
      return true;
    }
    auto visit = [&](Word next) {
      if (seen.insert(next)) {
        queue.push_back(std::move(next));
      }
    };
    for_each_swap(g, m, visit);
    if (!m.empty()) {
      visit(rotate_left(m, 1));
    }
    check_closure(seen, limits);
  }
  return false;
}

bool oracle_groupoid_conjugate(CubeComplexMap const& cx,
                               BasedWord const& first, BasedWord const& second,
                               std::size_t max_conj_len) {
  auto const& g = cx.graph();
  Limits limits;
  limits.max_length =
      2 * max_conj_len + first.word.size() + second.word.size();
  if (!oracle_conjugate(g, first.word, second.word, limits)) {
    return false;
  }
  // Breadth-first over non-backtracking edge paths from first.base.
  struct Path {
    VertexId at;
    Word word;
  };
  std::deque<Path> queue{{first.base, {}}};
  while (!queue.empty()) {
    Path p = std::move(queue.front());
    queue.pop_front();
    if (p.at == second.base) {
      Word candidate = concat(p.word, second.word);
      Word const back = inverse(p.word);
      candidate.insert(candidate.end(), back.begin(), back.end());
      if (oracle_equal(g, candidate, first.word, limits)) {
        return true;
      }
    }
    if (p.word.size() == max_conj_len) {
      continue;
    }
    for (GenIndex i = 0; i < g.size(); ++i) {
      for (int s : {1, -1}) {
        Letter const l{i, s};
        if (!p.word.empty() && p.word.back() == l.inverse()) {
          continue;
        }
        if (auto next = cx.step(p.at, l)) {
          Word w = p.word;
          w.push_back(l);
          queue.push_back({*next, std::move(w)});
        }
      }
    }
  }
  return false;
}

}  // namespace raag::oracle
