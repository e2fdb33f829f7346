#include "raag/cube_complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "raag/error.hpp"
#include "raag/io.hpp"
#include "raag/match.hpp"
#include "text.hpp"

namespace raag {

CubeComplexMap::CubeComplexMap(
    DefiningGraph g, std::vector<std::string> vertex_names,
    std::vector<Edge> edges,
    std::vector<std::array<std::size_t, 4>> squares)
    : graph_(std::move(g)),
      vertex_names_(std::move(vertex_names)),
      edges_(std::move(edges)) {
  std::size_t const m = vertex_names_.size();
  table_.assign(m * graph_.size() * 2, std::nullopt);
  std::vector<std::optional<std::size_t>> owner(table_.size());
  auto claim = [&](VertexId x, Letter l, VertexId to, std::size_t e) {
    auto s = slot(x, l);
    if (owner[s]) {
      conflicts_.push_back({x, l, *owner[s], e});
      return;
    }
    owner[s] = e;
    table_[s] = to;
  };
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto const& edge = edges_[e];
    if (edge.src >= m || edge.dst >= m) {
      throw ComplexError("edge '" + edge.id + "' references a missing vertex");
    }
    if (edge.label >= graph_.size()) {
      continue;
    }
    claim(edge.src, pos(edge.label), edge.dst, e);
    claim(edge.dst, neg(edge.label), edge.src, e);
  }
  for (auto const& ids : squares) {
    Square sq;
    sq.edges = ids;
    for (std::size_t e : ids) {
      if (e >= edges_.size()) {
        throw ComplexError("square references a missing edge");
      }
    }
    infer_square(sq);
    squares_.push_back(std::move(sq));
  }
}

void CubeComplexMap::infer_square(Square& sq) const {
  auto const& e = sq.edges;
  GenIndex const l1 = edges_[e[0]].label;
  GenIndex const l2 = edges_[e[1]].label;
  if (edges_[e[2]].label != l1 || edges_[e[3]].label != l2) {
    sq.problem = "opposite sides carry different labels";
    return;
  }
  if (l1 >= graph_.size() || l2 >= graph_.size() || !graph_.commutes(l1, l2)) {
    sq.problem = "side labels do not commute";
    return;
  }
  // The boundary reads l1^s1 l2^s2 l1^-s1 l2^-s2; try each orientation.
  auto walk = [&](std::size_t edge, int sign, VertexId from)
      -> std::optional<VertexId> {
    auto const& ed = edges_[edge];
    VertexId const tail = sign > 0 ? ed.src : ed.dst;
    if (tail != from) {
      return std::nullopt;
    }
    return sign > 0 ? ed.dst : ed.src;
  };
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      VertexId const v0 = s1 > 0 ? edges_[e[0]].src : edges_[e[0]].dst;
      auto v = walk(e[0], s1, v0);
      if (v) v = walk(e[1], s2, *v);
      if (v) v = walk(e[2], -s1, *v);
      if (v) v = walk(e[3], -s2, *v);
      if (v && *v == v0) {
        sq.consistent = true;
        sq.corner = v0;
        sq.first_letter = Letter{l1, s1};
        sq.second_letter = Letter{l2, s2};
        return;
      }
    }
  }
  sq.problem = "boundary does not close";
}

std::optional<VertexId> CubeComplexMap::find_vertex(
    std::string_view name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) {
    return std::nullopt;
  }
  return static_cast<VertexId>(it - vertex_names_.begin());
}

std::optional<VertexId> CubeComplexMap::step(VertexId x, Letter l) const {
  if (x >= vertex_count() || l.gen >= graph_.size()) {
    return std::nullopt;
  }
  return table_[slot(x, l)];
}

CubeComplexMap parse_complex(std::string_view text, DefiningGraph const& g,
                             std::string const& source) {
  std::vector<std::string> vertices;
  std::unordered_map<std::string, VertexId> vertex_index;
  std::vector<Edge> edges;
  std::unordered_map<std::string, std::size_t> edge_index;
  std::vector<std::array<std::size_t, 4>> squares;
  bool have_vertices = false;
  std::size_t line_no = 0;
  for (auto const& line : detail::split_lines(text)) {
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) {
      continue;
    }
    auto fail = [&](std::string const& token, std::string const& what) {
      throw ParseError(source, line_no, token, what);
    };
    if (tokens[0] == "vertices") {
      if (have_vertices) fail(tokens[0], "duplicate vertices line");
      if (tokens.size() < 2) fail(tokens[0], "vertices line needs names");
      have_vertices = true;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        if (!vertex_index.emplace(tokens[k], vertices.size()).second) {
          fail(tokens[k], "duplicate vertex name");
        }
        vertices.push_back(tokens[k]);
      }
    } else if (tokens[0] == "edge") {
      if (!have_vertices) fail(tokens[0], "edge line before vertices line");
      if (tokens.size() != 5) {
        fail(tokens[0], "edge line needs: edge <id> <src> <dst> <label>");
      }
      auto src = vertex_index.find(tokens[2]);
      if (src == vertex_index.end()) fail(tokens[2], "unknown vertex");
      auto dst = vertex_index.find(tokens[3]);
      if (dst == vertex_index.end()) fail(tokens[3], "unknown vertex");
      auto label = g.find(tokens[4]);
      if (!label) fail(tokens[4], "unknown generator");
      if (!edge_index.emplace(tokens[1], edges.size()).second) {
        fail(tokens[1], "duplicate edge id");
      }
      edges.push_back({tokens[1], src->second, dst->second, *label});
    } else if (tokens[0] == "square") {
      if (tokens.size() != 5) {
        fail(tokens[0], "square line needs four edge ids");
      }
      std::array<std::size_t, 4> ids{};
      for (std::size_t k = 0; k < 4; ++k) {
        auto it = edge_index.find(tokens[k + 1]);
        if (it == edge_index.end()) fail(tokens[k + 1], "unknown edge id");
        ids[k] = it->second;
      }
      squares.push_back(ids);
    } else {
      fail(tokens[0], "unknown directive");
    }
  }
  if (!have_vertices) {
    throw ParseError(source, 0, "", "missing vertices line");
  }
  return CubeComplexMap(g, std::move(vertices), std::move(edges),
                        std::move(squares));
}

CubeComplexMap load_complex(std::string const& path, DefiningGraph const& g) {
  return parse_complex(read_file(path), g, path);
}

namespace {

std::string describe(CubeComplexMap const& cx, Letter l) {
  std::string out = cx.graph().name(l.gen);
  if (l.sign < 0) {
    out += "^-1";
  }
  return out;
}

// Unordered pair of edge-ends at a vertex, by letter.
using Corner = std::tuple<VertexId, std::pair<GenIndex, int>,
                          std::pair<GenIndex, int>>;

Corner make_corner(VertexId v, Letter a, Letter b) {
  std::pair<GenIndex, int> x{a.gen, a.sign};
  std::pair<GenIndex, int> y{b.gen, b.sign};
  if (y < x) {
    std::swap(x, y);
  }
  return {v, x, y};
}

}  // namespace

ValidationReport validate(CubeComplexMap const& cx) {
  ValidationReport report;
  auto const& g = cx.graph();
  for (auto const& c : cx.conflicts()) {
    report.deterministic = false;
    report.violations.push_back(
        "determinism: edges '" + cx.edges()[c.first_edge].id + "' and '" +
        cx.edges()[c.second_edge].id + "' both leave vertex " +
        cx.vertex_name(c.vertex) + " with letter " + describe(cx, c.letter));
  }
  for (auto const& e : cx.edges()) {
    if (e.label >= g.size()) {
      report.labels_valid = false;
      report.violations.push_back("label: edge '" + e.id +
                                  "' has a label outside the presentation");
    }
  }
  std::set<Corner> corners;
  for (std::size_t k = 0; k < cx.squares().size(); ++k) {
    auto const& sq = cx.squares()[k];
    if (!sq.consistent) {
      report.squares_consistent = false;
      report.violations.push_back("square " + std::to_string(k + 1) + " (" +
                                  cx.edges()[sq.edges[0]].id + " ...): " +
                                  sq.problem);
      continue;
    }
    // Walk the boundary l1 l2 l1^-1 l2^-1 and record the corner at each
    // vertex as the two edge-ends leaving it.
    Letter const a = sq.first_letter;
    Letter const b = sq.second_letter;
    VertexId const v0 = sq.corner;
    auto const v1 = cx.step(v0, a);
    auto const v2 = v1 ? cx.step(*v1, b) : std::nullopt;
    auto const v3 = v2 ? cx.step(*v2, a.inverse()) : std::nullopt;
    if (!v1 || !v2 || !v3) {
      // Only possible when the labelling is not deterministic.
      continue;
    }
    corners.insert(make_corner(v0, a, b));
    corners.insert(make_corner(*v1, a.inverse(), b));
    corners.insert(make_corner(*v2, b.inverse(), a.inverse()));
    corners.insert(make_corner(*v3, a, b.inverse()));
  }
  if (cx.has_squares()) {
    report.convexity = ConvexityStatus::verified;
    for (VertexId x = 0; x < cx.vertex_count(); ++x) {
      std::vector<Letter> ends;
      for (GenIndex i = 0; i < g.size(); ++i) {
        for (int s : {1, -1}) {
          if (cx.step(x, Letter{i, s})) {
            ends.push_back(Letter{i, s});
          }
        }
      }
      for (std::size_t p = 0; p < ends.size(); ++p) {
        for (std::size_t q = p + 1; q < ends.size(); ++q) {
          if (!g.commutes(ends[p].gen, ends[q].gen)) {
            continue;
          }
          if (!corners.count(make_corner(x, ends[p], ends[q]))) {
            report.convexity = ConvexityStatus::violated;
            report.violations.push_back(
                "convexity: no square at vertex " + cx.vertex_name(x) +
                " spanning " + describe(cx, ends[p]) + " and " +
                describe(cx, ends[q]));
          }
        }
      }
    }
  } else {
    report.assumed.push_back("convexity (no squares given)");
  }
  report.assumed.push_back("injectivity of the map of universal covers");
  return report;
}

std::optional<VertexId> trace(CubeComplexMap const& cx, VertexId x,
                              std::span<Letter const> w) {
  if (x >= cx.vertex_count()) {
    return std::nullopt;
  }
  for (auto const& l : w) {
    auto next = cx.step(x, l);
    if (!next) {
      return std::nullopt;
    }
    x = *next;
  }
  return x;
}

BasedWord make_based_word(CubeComplexMap const& cx, VertexId base, Word w) {
  auto end = trace(cx, base, w);
  if (!end) {
    throw ComplexError("word cannot be traced from the base vertex");
  }
  return BasedWord{base, std::move(w), *end};
}

BasedWord parse_based_word(CubeComplexMap const& cx, std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("", 0, std::string(text),
                     "based word must look like '<vertex>: <word>'");
  }
  auto name = detail::tokenize(text.substr(0, colon));
  if (name.size() != 1) {
    throw ParseError("", 0, std::string(text.substr(0, colon)),
                     "expected one vertex name before ':'");
  }
  auto base = cx.find_vertex(name[0]);
  if (!base) {
    throw ParseError("", 0, name[0], "unknown vertex");
  }
  Word w = parse_word(cx.graph(), text.substr(colon + 1));
  auto end = trace(cx, *base, w);
  if (!end) {
    throw ParseError("", 0, std::string(text),
                     "word cannot be traced from vertex " + name[0]);
  }
  return BasedWord{*base, std::move(w), *end};
}

std::string format_based_word(CubeComplexMap const& cx, BasedWord const& bw,
                              WordStyle style) {
  std::string out = cx.vertex_name(bw.base) + ":";
  std::string word = format_word(cx.graph(), bw.word, style);
  if (!word.empty()) {
    out += ' ' + word;
  }
  return out;
}

BasedWord based_cycle(CubeComplexMap const& cx, BasedWord const& bw) {
  if (!bw.is_loop()) {
    throw ComplexError("based cycling needs a loop");
  }
  if (bw.word.empty()) {
    throw ComplexError("based cycling needs a nonempty word");
  }
  auto next = cx.step(bw.base, bw.word.front());
  if (!next) {
    throw ComplexError("first letter cannot be traced from the base vertex");
  }
  return BasedWord{*next, rotate_left(bw.word, 1), *next};
}

NormalizedLoop normalize_based(CubeComplexMap const& cx, BasedWord const& bw) {
  if (!bw.is_loop()) {
    throw ComplexError("normalization needs a loop");
  }
  NormalizedLoop out{bw.base, cyclic_normal_factors(cx.graph(), bw.word)};
  for (auto const& e : out.factors.events) {
    auto next = cx.step(out.base, e.letter);
    if (!next) {
      throw ComplexError("replay failure: letter " + describe(cx, e.letter) +
                         " cannot be followed from vertex " +
                         cx.vertex_name(out.base));
    }
    out.base = *next;
  }
  return out;
}

std::vector<VertexId> reach_by_centralizer(CubeComplexMap const& cx,
                                           VertexId start,
                                           CentralizerGens const& gens) {
  std::vector<Word> moves;
  for (auto& w : gens.words()) {
    moves.push_back(inverse(w));
    moves.push_back(std::move(w));
  }
  std::vector<bool> seen(cx.vertex_count(), false);
  seen.at(start) = true;
  std::vector<VertexId> frontier{start};
  // A vertex reachable at all is reachable within |V| - 1 layers.
  for (std::size_t layer = 0; layer < cx.vertex_count() && !frontier.empty();
       ++layer) {
    std::vector<VertexId> next;
    for (VertexId x : frontier) {
      for (auto const& m : moves) {
        if (auto y = trace(cx, x, m); y && !seen[*y]) {
          seen[*y] = true;
          next.push_back(*y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < seen.size(); ++v) {
    if (seen[v]) {
      out.push_back(v);
    }
  }
  return out;
}

namespace {

struct PreferredFormSearch {
  CubeComplexMap const& cx;
  CentralizerGens const& gens;
  VertexId target;
  std::vector<Letter> link_letters;

  // Root blocks z_k^p for k = index.., then zeta.
  bool roots(std::size_t index, VertexId at, std::size_t budget) const {
    if (index == gens.roots.size()) {
      return zeta(at, budget);
    }
    if (roots(index + 1, at, budget)) {
      return true;
    }
    Word const& z = gens.roots[index].word;
    Word const z_inv = inverse(z);
    for (Word const* block : {&z, &z_inv}) {
      VertexId x = at;
      for (std::size_t p = 1; p <= budget; ++p) {
        auto y = trace(cx, x, *block);
        if (!y) {
          break;
        }
        x = *y;
        if (roots(index + 1, x, budget - p)) {
          return true;
        }
      }
    }
    return false;
  }

  bool zeta(VertexId at, std::size_t budget) const {
    if (at == target) {
      return true;
    }
    if (budget == 0) {
      return false;
    }
    for (Letter l : link_letters) {
      if (auto y = cx.step(at, l); y && zeta(*y, budget - 1)) {
        return true;
      }
    }
    return false;
  }
};

}  // namespace

bool preferred_form_search(CubeComplexMap const& cx, VertexId start,
                           VertexId target, CentralizerGens const& gens,
                           std::size_t max_norm) {
  PreferredFormSearch search{cx, gens, target, {}};
  for (GenIndex i : gens.link_gens) {
    search.link_letters.push_back(pos(i));
    search.link_letters.push_back(neg(i));
  }
  return search.roots(0, start, max_norm);
}

GroupoidCertificate decide_groupoid_conjugacy(CubeComplexMap const& cx,
                                              BasedWord const& first,
                                              BasedWord const& second,
                                              ConjugatorSearch search) {
  if (!cx.deterministic()) {
    throw ComplexError("complex labelling is not deterministic");
  }
  for (auto const* bw : {&first, &second}) {
    auto end = trace(cx, bw->base, bw->word);
    if (!end || *end != bw->base) {
      throw ComplexError("input is not a loop in the complex");
    }
  }
  GroupoidCertificate cert;
  cert.first = normalize_based(cx, first);
  cert.second = normalize_based(cx, second);
  auto const& f1 = cert.first.factors;
  auto const& f2 = cert.second.factors;
  if (f1.components != f2.components) {
    cert.reason = "support components differ";
    return cert;
  }
  for (std::size_t k = 0; k < f1.factors.size(); ++k) {
    if (f1.factors[k].size() != f2.factors[k].size()) {
      cert.reason = "factor lengths differ";
      return cert;
    }
  }
  VertexId base = cert.first.base;
  for (std::size_t k = 0; k < f1.factors.size(); ++k) {
    auto shift = cyclic_equal(f1.factors[k], f2.factors[k]);
    if (!shift) {
      cert.reason = "cyclic normal forms differ";
      return cert;
    }
    cert.shifts.push_back(*shift);
    auto const& factor = f1.factors[k];
    auto moved = trace(cx, base,
                       std::span<Letter const>(factor).first(*shift));
    if (!moved) {
      throw ComplexError("replay failure during alignment");
    }
    base = *moved;
  }
  cert.aligned_base = base;
  cert.centralizer = centralizer_generators(cx.graph(), f2);
  VertexId const target = cert.second.base;
  if (search == ConjugatorSearch::reachability) {
    cert.reachable = reach_by_centralizer(cx, base, cert.centralizer);
    cert.conjugate = std::binary_search(cert.reachable.begin(),
                                        cert.reachable.end(), target);
  } else {
    cert.conjugate = preferred_form_search(cx, base, target, cert.centralizer,
                                           cx.vertex_count());
  }
  cert.reason = cert.conjugate ? "conjugator found"
                               : "no centralizer path joins the base vertices";
  return cert;
}

bool groupoid_conjugate(CubeComplexMap const& cx, BasedWord const& first,
                        BasedWord const& second) {
  return decide_groupoid_conjugacy(cx, first, second).conjugate;
}

}  // namespace raag
