#include "raag/piling.hpp"

#include <algorithm>

#include "raag/error.hpp"

namespace raag {

void Stack::pop_front() {
  ++head_;
  if (head_ == beads_.size()) {
    beads_.clear();
    head_ = 0;
  } else if (head_ >= 64 && head_ * 2 >= beads_.size()) {
    beads_.erase(beads_.begin(),
                 beads_.begin() + static_cast<std::ptrdiff_t>(head_));
    head_ = 0;
  }
}

bool operator==(Stack const& a, Stack const& b) {
  auto x = a.beads();
  auto y = b.beads();
  return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

Piling::Piling(DefiningGraph g)
    : graph_(std::move(g)),
      stacks_(graph_.size()),
      signed_count_(graph_.size(), 0) {}

void Piling::push(Letter l) {
  Stack& own = stacks_.at(l.gen);
  if (!own.empty() && own.back() == bead_of(-l.sign)) {
    own.pop_back();
    for (GenIndex j : graph_.neighbours(l.gen)) {
      stacks_[j].pop_back();
    }
    --signed_count_[l.gen];
    --signed_total_;
    return;
  }
  own.push_back(bead_of(l.sign));
  for (GenIndex j : graph_.neighbours(l.gen)) {
    stacks_[j].push_back(Bead::zero);
  }
  ++signed_count_[l.gen];
  ++signed_total_;
}

Letter Piling::pop_bottom(GenIndex i) {
  if (i >= stacks_.size() || !starts_signed(i)) {
    throw PilingError("no bottom tile on stack " + std::to_string(i + 1));
  }
  for (GenIndex j : graph_.neighbours(i)) {
    if (stacks_[j].empty() || stacks_[j].front() != Bead::zero) {
      throw PilingError("bottom tile of stack " + std::to_string(i + 1) +
                        " is not extractable");
    }
  }
  Letter const l{i, stacks_[i].front() == Bead::plus ? 1 : -1};
  stacks_[i].pop_front();
  for (GenIndex j : graph_.neighbours(i)) {
    stacks_[j].pop_front();
  }
  --signed_count_[i];
  --signed_total_;
  return l;
}

Letter Piling::pop_top(GenIndex i) {
  if (i >= stacks_.size() || !ends_signed(i)) {
    throw PilingError("no top tile on stack " + std::to_string(i + 1));
  }
  for (GenIndex j : graph_.neighbours(i)) {
    if (stacks_[j].empty() || stacks_[j].back() != Bead::zero) {
      throw PilingError("top tile of stack " + std::to_string(i + 1) +
                        " is not removable");
    }
  }
  Letter const l{i, stacks_[i].back() == Bead::plus ? 1 : -1};
  stacks_[i].pop_back();
  for (GenIndex j : graph_.neighbours(i)) {
    stacks_[j].pop_back();
  }
  --signed_count_[i];
  --signed_total_;
  return l;
}

std::optional<GenIndex> Piling::lowest_signed() const noexcept {
  for (GenIndex i = 0; i < signed_count_.size(); ++i) {
    if (signed_count_[i] != 0) {
      return i;
    }
  }
  return std::nullopt;
}

std::string Piling::debug_string() const {
  std::string out;
  for (GenIndex i = 0; i < stacks_.size(); ++i) {
    out += graph_.name(i);
    out += ':';
    if (!stacks_[i].empty()) {
      out += ' ';
    }
    for (Bead b : stacks_[i].beads()) {
      out += b == Bead::plus ? '+' : b == Bead::minus ? '-' : '0';
    }
    out += '\n';
  }
  return out;
}

bool operator==(Piling const& a, Piling const& b) {
  return a.graph_ == b.graph_ && a.stacks_ == b.stacks_;
}

Piling Piling::from_stacks(DefiningGraph g,
                           std::vector<std::vector<Bead>> const& stacks) {
  if (stacks.size() != g.size()) {
    throw PilingError("abstract piling has the wrong number of stacks");
  }
  Piling abstract(g);
  for (GenIndex i = 0; i < stacks.size(); ++i) {
    for (Bead b : stacks[i]) {
      abstract.stacks_[i].push_back(b);
      if (b != Bead::zero) {
        ++abstract.signed_count_[i];
        ++abstract.signed_total_;
      }
    }
  }
  Word w;
  try {
    w = sigma_star(abstract);
  } catch (PilingError const&) {
    throw PilingError("abstract piling is not realizable");
  }
  Piling p = pi_star(g, w);
  if (!(p == abstract)) {
    throw PilingError("abstract piling is not realizable");
  }
  return p;
}

Piling push_letter(Piling p, Letter l) {
  if (l.gen >= p.stack_count()) {
    throw PilingError("letter outside the presentation");
  }
  p.push(l);
  return p;
}

Piling pi_star(DefiningGraph const& g, std::span<Letter const> w) {
  Piling p(g);
  for (auto const& l : w) {
    if (l.gen >= g.size()) {
      throw PilingError("letter outside the presentation");
    }
    p.push(l);
  }
  return p;
}

namespace {

// Largest generator whose stack starts with a signed bead, skipping
// `exclude`; nullopt if there is none.
std::optional<GenIndex> largest_extractable(
    Piling const& p, std::optional<GenIndex> exclude = std::nullopt) {
  for (GenIndex i = p.stack_count(); i-- > 0;) {
    if (i != exclude && p.starts_signed(i)) {
      return i;
    }
  }
  return std::nullopt;
}

bool has_beads(Piling const& p) {
  for (GenIndex i = 0; i < p.stack_count(); ++i) {
    if (!p.stack(i).empty()) {
      return true;
    }
  }
  return false;
}

}  // namespace

Word sigma_star(Piling p) {
  Word out;
  out.reserve(p.signed_beads());
  while (!p.empty()) {
    auto i = largest_extractable(p);
    if (!i) {
      throw PilingError("extraction stuck: no stack starts with a signed bead");
    }
    out.push_back(p.pop_bottom(*i));
  }
  if (has_beads(p)) {
    throw PilingError("extraction stuck: only 0-beads remain");
  }
  return out;
}

bool is_cyclically_reduced(Piling const& p) {
  for (GenIndex i = 0; i < p.stack_count(); ++i) {
    if (p.starts_signed(i) && p.ends_signed(i) &&
        p.stack(i).front() != p.stack(i).back()) {
      return false;
    }
  }
  return true;
}

SupportGraph support_graph(Piling const& p) {
  std::vector<GenIndex> vertices;
  for (GenIndex i = 0; i < p.stack_count(); ++i) {
    if (p.signed_beads(i) != 0) {
      vertices.push_back(i);
    }
  }
  return SupportGraph(p.graph(), std::move(vertices));
}

CyclicReduction cyclic_reduce(Piling p) {
  std::vector<CyclingEvent> events;
  std::vector<GenIndex> work;
  std::vector<bool> queued(p.stack_count(), true);
  for (GenIndex i = p.stack_count(); i-- > 0;) {
    work.push_back(i);
  }
  auto reducible = [&p](GenIndex i) {
    return p.starts_signed(i) && p.ends_signed(i) &&
           p.stack(i).front() != p.stack(i).back();
  };
  while (!work.empty()) {
    GenIndex i = work.back();
    work.pop_back();
    queued[i] = false;
    if (!reducible(i)) {
      continue;
    }
    Letter const bottom = p.pop_bottom(i);
    p.pop_top(i);
    events.push_back({bottom, EventKind::cyclic_reduction, std::nullopt});
    auto requeue = [&](GenIndex j) {
      if (!queued[j]) {
        queued[j] = true;
        work.push_back(j);
      }
    };
    requeue(i);
    for (GenIndex j : p.graph().neighbours(i)) {
      requeue(j);
    }
  }
  return {std::move(p), std::move(events)};
}

Decomposition decompose(Piling p) {
  auto apex = p.lowest_signed();
  if (!apex) {
    throw PilingError("decompose: empty piling");
  }
  Decomposition d{Piling(p.graph()), Piling(p.graph()), *apex, {}};
  while (auto j = largest_extractable(p, *apex)) {
    Letter const l = p.pop_bottom(*j);
    d.extracted.push_back(l);
    d.p0.push(l);
  }
  d.p1 = std::move(p);
  return d;
}

std::pair<Piling, CyclingEvent> cycle_bottom(Piling p, GenIndex i) {
  Letter const l = p.pop_bottom(i);
  p.push(l);
  return {std::move(p), CyclingEvent{l, EventKind::cycling, std::nullopt}};
}

bool is_pyramidal(Piling const& p) {
  auto apex = p.lowest_signed();
  if (!apex) {
    return false;
  }
  for (GenIndex j = 0; j < p.stack_count(); ++j) {
    if (j != *apex && p.starts_signed(j)) {
      return false;
    }
  }
  return true;
}

Pyramidalization pyramidalize(Piling p) {
  if (p.empty()) {
    throw PilingError("pyramidalize: empty piling");
  }
  if (!is_cyclically_reduced(p)) {
    throw PilingError("pyramidalize: piling is not cyclically reduced");
  }
  if (!support_graph(p).connected()) {
    throw PilingError("pyramidalize: piling is split");
  }
  Pyramidalization out{Piling(p.graph()), {}, 0};
  for (;;) {
    Decomposition d = decompose(std::move(p));
    p = std::move(d.p1);
    if (d.extracted.empty()) {
      break;
    }
    ++out.iterations;
    for (Letter l : d.extracted) {
      p.push(l);
      out.events.push_back({l, EventKind::cycling, std::nullopt});
    }
  }
  out.piling = std::move(p);
  return out;
}

std::vector<Piling> split_components(Piling const& p) {
  SupportGraph const support = support_graph(p);
  std::vector<Piling> factors(support.components().size(),
                              Piling(p.graph()));
  for (Letter l : sigma_star(p)) {
    factors[support.component_of(l.gen)].push(l);
  }
  return factors;
}

}  // namespace raag
