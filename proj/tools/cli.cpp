#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "raag/centralizer.hpp"
#include "raag/conjugacy.hpp"
#include "raag/cube_complex.hpp"
#include "raag/error.hpp"
#include "raag/io.hpp"
#include "raag/oracle.hpp"
#include "raag/support.hpp"

namespace raag::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string group;
  std::string complex;
  std::string word;
  std::string second;
  std::string loop1;
  std::string loop2;
  std::string words_file;
  std::string search = "reachability";
  std::vector<std::size_t> sizes;
  std::size_t reps = 15;
  std::uint64_t seed = 1;
  std::size_t max_conj_len = 8;
  bool json = false;
  bool no_timings = false;
  bool collapse = false;
};

// Text lines and the JSON object of one report, built side by side.
struct Report {
  std::vector<std::string> lines;
  Json json = Json::object();
  int status = ok;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

class Session {
 public:
  explicit Session(Options const& opt) : opt_(opt) {}

  DefiningGraph const& graph() {
    if (!graph_) {
      graph_ = load_presentation(opt_.group);
    }
    return *graph_;
  }

  CubeComplexMap const& complex() {
    if (!complex_) {
      complex_ = load_complex(opt_.complex, graph());
    }
    return *complex_;
  }

  Word word(std::string const& text, std::string const& flag) {
    auto const& g = graph();
    try {
      return parse_word(g, text);
    } catch (ParseError const& e) {
      throw ParseError(flag, 0, e.token(), e.reason());
    }
  }

  BasedWord loop(std::string const& text, std::string const& flag) {
    auto const& cx = complex();
    try {
      return parse_based_word(cx, text);
    } catch (ParseError const& e) {
      throw ParseError(flag, 0, e.token(), e.reason());
    }
  }

  std::string show(std::span<Letter const> w) {
    if (w.empty()) {
      return "1";
    }
    return format_word(graph(), w,
                       opt_.collapse ? WordStyle::collapsed
                                     : WordStyle::expanded);
  }

  std::string show(BasedWord const& bw) {
    return complex().vertex_name(bw.base) + ": " + show(bw.word);
  }

  std::string show_vertex(VertexId v) { return complex().vertex_name(v); }

  std::string show_set(std::vector<GenIndex> const& gens) {
    std::string s = "{";
    for (std::size_t k = 0; k < gens.size(); ++k) {
      s += (k ? " " : "") + graph().name(gens[k]);
    }
    return s + "}";
  }

  Json names(std::vector<GenIndex> const& gens) {
    Json out = Json::array();
    for (auto gen : gens) {
      out.push_back(graph().name(gen));
    }
    return out;
  }

  void factors_report(Report& r, std::string const& label,
                      CyclicNormalFactors const& f) {
    std::string words;
    std::string comps;
    Json jf = Json::array();
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      words += (k ? " | " : "") + show(f.factors[k]);
      comps += (k ? " " : "") + show_set(f.components[k]);
      jf.push_back(Json{{"word", show(f.factors[k])},
                        {"component", names(f.components[k])}});
    }
    if (f.factors.empty()) {
      words = "1";
    }
    r.lines.push_back(label + " factors: " + words);
    r.lines.push_back(label + " components: " + comps);
    r.json[label] = Json{{"factors", jf}, {"events", f.events.size()}};
  }

  void centralizer_report(Report& r, CentralizerGens const& gens) {
    Json roots = Json::array();
    for (auto const& root : gens.roots) {
      r.lines.push_back("root: " + show(root.word) + " (power " +
                        std::to_string(root.power) + ")");
      roots.push_back(Json{{"word", show(root.word)}, {"power", root.power}});
    }
    std::string link;
    for (auto gen : gens.link_gens) {
      link += (link.empty() ? "" : " ") + graph().name(gen);
    }
    r.lines.push_back("link: " + (link.empty() ? std::string("(none)") : link));
    r.json["centralizer"] =
        Json{{"roots", roots}, {"link", names(gens.link_gens)}};
  }

  Options const& opt() const { return opt_; }

 private:
  Options const& opt_;
  std::optional<DefiningGraph> graph_;
  std::optional<CubeComplexMap> complex_;
};

void decision(Report& r, bool yes, std::string const& detail = "") {
  r.lines.push_back(std::string(yes ? "YES" : "NO") +
                    (detail.empty() ? "" : " (" + detail + ")"));
  r.json["decision"] = yes;
}

Report cmd_normal_form(Session& s) {
  Report r;
  Word w = s.word(s.opt().word, "--word");
  auto nf = normal_form(s.graph(), w);
  r.lines.push_back(s.show(nf.word));
  r.json["normal_form"] = s.show(nf.word);
  r.json["length"] = nf.word.size();
  return r;
}

Report cmd_cyclic_normal_form(Session& s) {
  Report r;
  Word w = s.word(s.opt().word, "--word");
  auto f = cyclic_normal_factors(s.graph(), w);
  Word product = f.product();
  r.lines.push_back(s.show(product));
  r.json["cyclic_normal_form"] = s.show(product);
  s.factors_report(r, "input", f);
  r.lines.push_back("events: " + std::to_string(f.events.size()));
  return r;
}

Report cmd_word_problem(Session& s) {
  Report r;
  Word w = s.word(s.opt().word, "--word");
  auto nf = normal_form(s.graph(), w);
  bool identity = nf.word.empty();
  decision(r, identity,
           identity ? "identity" : "normal form: " + s.show(nf.word));
  r.json["normal_form"] = s.show(nf.word);
  return r;
}

Report cmd_conjugate(Session& s) {
  Report r;
  Word w = s.word(s.opt().word, "--word");
  Word v = s.word(s.opt().second, "--second");
  auto cert = decide_conjugacy(s.graph(), w, v);
  decision(r, cert.conjugate);
  s.factors_report(r, "first", cert.first);
  s.factors_report(r, "second", cert.second);
  std::string shifts;
  Json js = Json::array();
  for (auto const& t : cert.shifts) {
    shifts += (shifts.empty() ? "" : " ") + (t ? std::to_string(*t) : "-");
    js.push_back(t ? Json(*t) : Json(nullptr));
  }
  if (!cert.shifts.empty()) {
    r.lines.push_back("shifts: " + shifts);
  }
  r.json["shifts"] = js;
  return r;
}

Report cmd_centralizer(Session& s) {
  Report r;
  Word w = s.word(s.opt().word, "--word");
  auto f = cyclic_normal_factors(s.graph(), w);
  r.lines.push_back("cyclic normal form: " + s.show(f.product()));
  r.json["cyclic_normal_form"] = s.show(f.product());
  s.centralizer_report(r, centralizer_generators(s.graph(), f));
  return r;
}

Report cmd_validate(Session& s) {
  Report r;
  auto const& cx = s.complex();
  auto report = validate(cx);
  r.lines.push_back(report.ok() ? "VALID" : "INVALID");
  char const* convexity =
      report.convexity == ConvexityStatus::verified   ? "verified"
      : report.convexity == ConvexityStatus::violated ? "violated"
                                                      : "not checked";
  r.lines.push_back("vertices: " + std::to_string(cx.vertex_count()) +
                    ", edges: " + std::to_string(cx.edges().size()) +
                    ", squares: " + std::to_string(cx.squares().size()));
  r.lines.push_back(std::string("deterministic: ") +
                    (report.deterministic ? "yes" : "no"));
  r.lines.push_back(std::string("labels valid: ") +
                    (report.labels_valid ? "yes" : "no"));
  r.lines.push_back(std::string("squares consistent: ") +
                    (report.squares_consistent ? "yes" : "no"));
  r.lines.push_back(std::string("convexity: ") + convexity);
  r.lines.push_back("commuting pairs: " +
                    std::to_string(cx.graph().commuting_pairs().size()));
  for (auto const& a : report.assumed) {
    r.lines.push_back("assumed: " + a);
  }
  for (auto const& v : report.violations) {
    r.lines.push_back("violation: " + v);
  }
  r.json["valid"] = report.ok();
  r.json["deterministic"] = report.deterministic;
  r.json["labels_valid"] = report.labels_valid;
  r.json["squares_consistent"] = report.squares_consistent;
  r.json["convexity"] = convexity;
  r.json["assumed"] = report.assumed;
  r.json["violations"] = report.violations;
  r.status = report.ok() ? ok : input_error;
  return r;
}

ConjugatorSearch parse_search(std::string const& name) {
  if (name == "reachability") return ConjugatorSearch::reachability;
  if (name == "enumeration") return ConjugatorSearch::enumeration;
  throw ParseError("--search", 0, name, "unknown conjugator search");
}

Report cmd_groupoid(Session& s) {
  Report r;
  auto const& cx = s.complex();
  auto report = validate(cx);
  if (!report.deterministic) {
    throw ParseError(s.opt().complex, 0, "",
                     "complex labelling is not deterministic");
  }
  auto a = s.loop(s.opt().loop1, "--loop1");
  auto b = s.loop(s.opt().loop2, "--loop2");
  for (auto const* bw : {&a, &b}) {
    if (!bw->is_loop()) {
      throw ParseError(bw == &a ? "--loop1" : "--loop2", 0, s.show(*bw),
                       "based word is not a loop");
    }
  }
  auto cert = decide_groupoid_conjugacy(cx, a, b, parse_search(s.opt().search));
  decision(r, cert.conjugate);
  r.lines.push_back("reason: " + cert.reason);
  r.json["reason"] = cert.reason;
  auto normalized = [&](std::string const& label, NormalizedLoop const& n) {
    BasedWord bw{n.base, n.factors.product(), n.base};
    r.lines.push_back(label + " normalized: " + s.show(bw));
    r.json[label] = Json{{"base", s.show_vertex(n.base)},
                         {"word", s.show(bw.word)}};
  };
  normalized("first", cert.first);
  normalized("second", cert.second);
  if (cert.aligned_base) {
    r.lines.push_back("aligned base: " + s.show_vertex(*cert.aligned_base));
    r.json["aligned_base"] = s.show_vertex(*cert.aligned_base);
    s.centralizer_report(r, cert.centralizer);
    if (!cert.reachable.empty()) {
      std::string reach;
      Json jr = Json::array();
      for (auto v : cert.reachable) {
        reach += (reach.empty() ? "" : " ") + s.show_vertex(v);
        jr.push_back(s.show_vertex(v));
      }
      r.lines.push_back("reachable: " + reach);
      r.json["reachable"] = jr;
    }
  }
  if (report.convexity != ConvexityStatus::verified) {
    r.lines.push_back("note: convexity not verified; answer assumes it");
  }
  return r;
}

Report cmd_oracle_equal(Session& s) {
  Report r;
  Word w = s.word(s.opt().word, "--word");
  Word v = s.word(s.opt().second, "--second");
  decision(r, oracle::oracle_equal(s.graph(), w, v));
  return r;
}

Report cmd_oracle_conjugate(Session& s) {
  Report r;
  Word w = s.word(s.opt().word, "--word");
  Word v = s.word(s.opt().second, "--second");
  decision(r, oracle::oracle_conjugate(s.graph(), w, v));
  return r;
}

Report cmd_oracle_groupoid(Session& s) {
  Report r;
  auto a = s.loop(s.opt().loop1, "--loop1");
  auto b = s.loop(s.opt().loop2, "--loop2");
  decision(r, oracle::oracle_groupoid_conjugate(s.complex(), a, b,
                                                s.opt().max_conj_len));
  return r;
}

std::vector<Word> read_words(Session& s, std::string const& path) {
  std::vector<Word> words;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    try {
      words.push_back(parse_word(s.graph(), line));
    } catch (ParseError const& e) {
      throw ParseError(path, line_no, e.token(), e.reason());
    }
  }
  return words;
}

Report cmd_bench(Session& s, Options const& opt) {
  Report r;
  DefiningGraph g = opt.group.empty() ? default_bench_graph() : s.graph();
  std::vector<BenchRow> rows;
  if (!opt.words_file.empty()) {
    rows = bench_conjugacy(g, read_words(s, opt.words_file), opt.reps);
  } else {
    auto sizes = opt.sizes;
    if (sizes.empty()) {
      for (std::size_t k = 0; k <= 4; ++k) sizes.push_back(10000u << k);
    }
    rows = bench_conjugacy(g, sizes, opt.reps, opt.seed);
  }
  r.lines.push_back("n seconds seconds/n");
  Json jr = Json::array();
  for (auto const& row : rows) {
    double per = row.n ? row.seconds / static_cast<double>(row.n) : 0.0;
    std::ostringstream line;
    line << row.n << ' ' << std::scientific << std::setprecision(4)
         << row.seconds << ' ' << per;
    r.lines.push_back(line.str());
    jr.push_back(Json{{"n", row.n}, {"seconds", row.seconds},
                      {"seconds_per_n", per}});
  }
  r.json["rows"] = jr;
  return r;
}

}  // namespace

DefiningGraph default_bench_graph() {
  return DefiningGraph::build({"a1", "a2", "a3", "a4"},
                              {{"a1", "a4"}, {"a2", "a3"}, {"a2", "a4"}});
}

Word random_reduced_word(DefiningGraph const& g, std::size_t length,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<GenIndex> gen(0, g.size() - 1);
  std::bernoulli_distribution sign(0.5);
  Word w;
  w.reserve(length);
  while (w.size() < length) {
    Letter l{gen(rng), sign(rng) ? 1 : -1};
    if (w.empty() || !(w.back() == l.inverse())) {
      w.push_back(l);
    }
  }
  return w;
}

std::vector<BenchRow> bench_conjugacy(DefiningGraph const& g,
                                      std::vector<Word> const& words,
                                      std::size_t reps) {
  std::vector<BenchRow> rows;
  reps = std::max<std::size_t>(reps, 1);
  for (auto const& w : words) {
    Word v = rotate_left(w, w.size() / 2);
    std::vector<double> times;
    bool sink = false;
    for (std::size_t k = 0; k < reps; ++k) {
      auto start = Clock::now();
      sink ^= conjugate_in_raag(g, w, v);
      times.push_back(elapsed_ms(start) / 1000.0);
    }
    if (!sink && reps % 2 == 1) {
      // Unreachable for a rotation; keeps the call from being elided.
      throw std::logic_error("rotation reported as not conjugate");
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2,
                     times.end());
    rows.push_back({2 * w.size(), times[times.size() / 2]});
  }
  return rows;
}

std::vector<BenchRow> bench_conjugacy(DefiningGraph const& g,
                                      std::vector<std::size_t> const& sizes,
                                      std::size_t reps, std::uint64_t seed) {
  std::vector<Word> words;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    words.push_back(random_reduced_word(g, sizes[k] / 2, seed + k));
  }
  return bench_conjugacy(g, words, reps);
}

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Word and conjugacy problems in right-angled Artin groups",
               "raag"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto group_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-g,--group", opt.group, "Presentation file");
    if (required) o->required();
  };
  auto word_opt = [&](CLI::App* sub) {
    sub->add_option("-w,--word", opt.word, "Word, e.g. \"a1 a2^-1\"")
        ->required();
  };
  auto second_opt = [&](CLI::App* sub) {
    sub->add_option("-v,--second", opt.second, "Second word")->required();
  };
  auto complex_opts = [&](CLI::App* sub, bool loops) {
    sub->add_option("-x,--complex", opt.complex, "Complex file")->required();
    if (loops) {
      sub->add_option("--loop1", opt.loop1, "Based loop \"<vertex>: <word>\"")
          ->required();
      sub->add_option("--loop2", opt.loop2, "Based loop \"<vertex>: <word>\"")
          ->required();
    }
  };
  auto output_opts = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Machine-readable report");
    sub->add_flag("--no-timings", opt.no_timings, "Omit timings");
    sub->add_flag("--collapse", opt.collapse, "Write runs as powers");
  };

  struct Entry {
    CLI::App* sub;
    Report (*fn)(Session&);
  };
  std::vector<Entry> entries;
  auto add = [&](char const* name, char const* help, Report (*fn)(Session&)) {
    auto* sub = app.add_subcommand(name, help);
    output_opts(sub);
    entries.push_back({sub, fn});
    return sub;
  };

  auto* nf = add("normal-form", "Print the normal form", cmd_normal_form);
  group_opt(nf, true);
  word_opt(nf);
  auto* cnf = add("cyclic-normal-form",
                  "Print a conjugate as commuting cyclic normal forms",
                  cmd_cyclic_normal_form);
  group_opt(cnf, true);
  word_opt(cnf);
  auto* wp = add("word-problem", "Decide whether a word is the identity",
                 cmd_word_problem);
  group_opt(wp, true);
  word_opt(wp);
  auto* cj = add("conjugate", "Decide conjugacy of two words", cmd_conjugate);
  group_opt(cj, true);
  word_opt(cj);
  second_opt(cj);
  auto* ce = add("centralizer", "Centralizer generators of a word",
                 cmd_centralizer);
  group_opt(ce, true);
  word_opt(ce);
  auto* vc = add("validate-complex", "Check a complex file", cmd_validate);
  group_opt(vc, true);
  complex_opts(vc, false);
  auto* gc = add("groupoid-conjugate",
                 "Decide free homotopy of two loops in a complex",
                 cmd_groupoid);
  group_opt(gc, true);
  complex_opts(gc, true);
  gc->add_option("--search", opt.search,
                 "Conjugator search: reachability or enumeration");

  auto* bench = app.add_subcommand("bench", "Time conjugacy on random words");
  output_opts(bench);
  group_opt(bench, false);
  bench->add_option("--sizes", opt.sizes, "Total lengths n")->delimiter(',');
  bench->add_option("--reps", opt.reps, "Repetitions per size");
  bench->add_option("--seed", opt.seed, "Random seed");
  bench->add_option("--words-file", opt.words_file, "One word per line");

  auto hidden = [&](char const* name, Report (*fn)(Session&)) {
    auto* sub = add(name, "", fn);
    sub->group("");
    group_opt(sub, true);
    return sub;
  };
  auto* oe = hidden("oracle-equal", cmd_oracle_equal);
  word_opt(oe);
  second_opt(oe);
  auto* oc = hidden("oracle-conjugate", cmd_oracle_conjugate);
  word_opt(oc);
  second_opt(oc);
  auto* og = hidden("oracle-groupoid", cmd_oracle_groupoid);
  complex_opts(og, true);
  og->add_option("--max-conj-len", opt.max_conj_len, "Conjugator length bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  Session session(opt);
  std::string command;
  try {
    auto start = Clock::now();
    Report report;
    if (bench->parsed()) {
      command = "bench";
      report = cmd_bench(session, opt);
    } else {
      for (auto const& e : entries) {
        if (e.sub->parsed()) {
          command = e.sub->get_name();
          report = e.fn(session);
        }
      }
    }
    double ms = elapsed_ms(start);
    if (opt.json) {
      Json j;
      j["command"] = command;
      for (auto const& [key, value] : report.json.items()) {
        j[key] = value;
      }
      if (!opt.no_timings) {
        j["time_ms"] = ms;
      }
      out << j.dump(2) << '\n';
    } else {
      for (auto const& line : report.lines) {
        out << line << '\n';
      }
      if (!opt.no_timings && command != "bench") {
        out << "time: " << fixed(ms, 3) << " ms\n";
      }
    }
    return report.status;
  } catch (ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (ComplexError const& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (oracle::BoundExceeded const& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
}

}  // namespace raag::cli
