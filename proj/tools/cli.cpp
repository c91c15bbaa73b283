#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "toric/caps.hpp"
#include "toric/dynamics.hpp"
#include "toric/fs_graph.hpp"
#include "toric/labeling.hpp"
#include "toric/operator.hpp"
#include "toric/orbit.hpp"
#include "toric/orientation.hpp"
#include "toric/parallel.hpp"
#include "toric/report.hpp"

namespace toric::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what) {
  throw ToricError("graph spec: syntax error at position " + std::to_string(pos) + ": " + what);
}

int parse_number(std::string_view text, std::size_t offset) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{})
    syntax_error(offset, "expected an integer");
  if (end != text.data() + text.size())
    syntax_error(offset + static_cast<std::size_t>(end - text.data()), "unexpected character");
  return value;
}

std::string step_name(const Step& st, int n) {
  if (st.kind == Step::Kind::shift) return "c^" + std::to_string(st.a);
  if (st.b == st.a + 1) return "tau" + std::to_string(st.a);
  if (st.a == n && st.b == 1) return "tau" + std::to_string(n);
  return "tau" + std::to_string(st.a) + "," + std::to_string(st.b);
}

Caps effective_caps(const Command& cmd) {
  Caps caps = Caps::from_environment();
  if (!cmd.max_n) return caps;
  if (cmd.verb != "verify") return caps.with_max_n(*cmd.max_n);
  caps.trees = std::max(caps.trees, *cmd.max_n);
  caps.forests = std::max(caps.forests, *cmd.max_n);
  caps.fs = std::max(caps.fs, *cmd.max_n);
  caps.census = std::max(caps.census, *cmd.max_n);
  return caps;
}

int thread_count(const Command& cmd) { return cmd.threads > 0 ? cmd.threads : default_threads(); }

void emit_report(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      out << to_json(report).dump(2) << "\n";
      break;
    case Format::csv:
      out << "name,pass,checked,counterexample\n";
      for (const auto& v : report.verdicts)
        out << v.name << ',' << (v.pass ? "true" : "false") << ',' << v.checked << ','
            << (v.counterexample ? "\"" + *v.counterexample + "\"" : "") << "\n";
      break;
    case Format::text:
      out << to_text(report);
      break;
  }
}

Report merge_reports(std::string suite, const std::vector<Report>& parts) {
  Report merged;
  merged.suite = std::move(suite);
  for (const auto& part : parts) {
    merged.scope[part.suite] = part.scope;
    merged.graphs = std::max(merged.graphs, part.graphs);
    merged.labelings = std::max(merged.labelings, part.labelings);
    merged.verdicts.insert(merged.verdicts.end(), part.verdicts.begin(), part.verdicts.end());
    for (const auto& row : part.rows) merged.rows.push_back(row);
    if (part.seed) merged.seed = part.seed;
  }
  return merged;
}

int run_step(const Command& cmd, const Graph& g, std::ostream& out) {
  if (!cmd.labeling) throw UsageError("step needs --labeling");
  const int n = g.size();
  auto op = parse_operator(cmd.op, n);
  Program program(op, n);
  Labeling start = parse_labeling(*cmd.labeling, n);
  Labeling cur = start;
  Json trace = Json::array();
  std::ostringstream text;
  if (cmd.trace) text << "start " << to_string(cur) << "\n";
  for (std::uint64_t rep = 0; rep < cmd.steps; ++rep) {
    if (!cmd.trace) {
      program.apply(g, cur);
      continue;
    }
    for (const Step& st : program.steps()) {
      if (st.kind == Step::Kind::toggle)
        inplace::toggle(g, cur, st.a, st.b);
      else
        cur.shift(st.a);
      text << step_name(st, n) << ' ' << to_string(cur) << "\n";
      trace.push_back(Json{{"step", step_name(st, n)}, {"labeling", to_string(cur)}});
    }
  }
  switch (cmd.format) {
    case Format::json: {
      Json j;
      j["graph"] = cmd.graph;
      j["operator"] = op.describe();
      j["input"] = to_string(start);
      j["steps"] = cmd.steps;
      j["output"] = to_string(cur);
      if (cmd.trace) j["trace"] = trace;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "input,steps,output\n" << to_string(start) << ',' << cmd.steps << ',' << to_string(cur) << "\n";
      break;
    case Format::text:
      out << text.str();
      if (!cmd.trace) out << to_string(cur) << "\n";
      break;
  }
  return kOk;
}

int run_orbit(const Command& cmd, const Graph& g, std::ostream& out) {
  if (!cmd.labeling) throw UsageError("orbit needs --labeling");
  auto op = parse_operator(cmd.op, g.size());
  Labeling start = parse_labeling(*cmd.labeling, g.size());
  auto labelings = orbit(g, op, start);
  switch (cmd.format) {
    case Format::json: {
      Json j;
      j["graph"] = cmd.graph;
      j["operator"] = op.describe();
      j["start"] = to_string(start);
      j["size"] = labelings.size();
      Json list = Json::array();
      for (const auto& l : labelings) list.push_back(to_string(l));
      j["orbit"] = std::move(list);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "index,labeling\n";
      for (std::size_t i = 0; i < labelings.size(); ++i) out << i << ',' << to_string(labelings[i]) << "\n";
      break;
    case Format::text:
      for (std::size_t i = 0; i < labelings.size(); ++i) out << (i ? " " : "") << to_string(labelings[i]);
      out << "\nsize " << labelings.size() << "\n";
      break;
  }
  return kOk;
}

int run_census(const Command& cmd, const Graph& g, std::ostream& out, bool order_only) {
  const Caps caps = effective_caps(cmd);
  const int n = g.size();
  auto op = parse_operator(cmd.op, n);
  CensusOptions opts;
  opts.threads = thread_count(cmd);
  opts.n_cap = caps.census;
  const bool forest_check = op.kind == OperatorSpec::Kind::toric_promotion && n >= 2 && is_forest(g);
  const bool cpro_check = cmd.op == "cpro" && n >= 1 && is_forest(g) && is_connected(g);
  opts.per_rank_sizes = forest_check;
  CensusReport report = census(g, op, opts);
  report.graph = cmd.graph;
  report.seed = cmd.seed;
  if (forest_check) {
    Verdict v("forest_orbit_size_formula");
    for (std::uint64_t r = 0; r < report.labelings; ++r) {
      Labeling s = unrank(n, r);
      const auto predicted = predicted_orbit_size(g, s);
      v.check(report.size_of_rank[r] == predicted, [&] {
        return to_string(s) + " measured " + std::to_string(report.size_of_rank[r]) + " predicted " +
               std::to_string(predicted);
      });
    }
    report.verdicts.push_back(std::move(v));
  }
  if (cpro_check) {
    Verdict v("tree_cpro_orbit_size_equals_n");
    for (const auto& rec : report.orbits)
      v.check(rec.size == static_cast<std::uint64_t>(n), [&] { return to_string(unrank(n, rec.representative)); });
    report.verdicts.push_back(std::move(v));
  }

  switch (cmd.format) {
    case Format::json:
      out << census_json(report).dump(2) << "\n";
      break;
    case Format::csv:
      out << "size,count\n";
      for (auto [size, count] : report.orbit_sizes) out << size << ',' << count << "\n";
      break;
    case Format::text:
      if (order_only) {
        out << report.order.str() << "\n";
        break;
      }
      out << "graph: " << report.graph << "\noperator: " << report.op << "\nlabelings: " << report.labelings
          << "\norbit sizes:\n";
      for (auto [size, count] : report.orbit_sizes) out << "  " << size << " x " << count << "\n";
      out << "order: " << report.order.str() << "\n";
      for (const auto& v : report.verdicts) {
        out << (v.pass ? "PASS " : "FAIL ") << v.name;
        if (v.counterexample) out << "  counterexample: " << *v.counterexample;
        out << "\n";
      }
      break;
  }
  for (const auto& v : report.verdicts)
    if (!v.pass) return kTheoremFailure;
  return kOk;
}

int run_classes(const Command& cmd, const Graph& g, std::ostream& out, MoveKind kind) {
  const Caps caps = effective_caps(cmd);
  OrientationSpace space(g, caps.edges);
  auto part = kind == MoveKind::flip ? flip_classes(space) : double_flip_classes(space);
  std::size_t total = 0;
  for (const auto& cls : part.classes) total += cls.size();
  const char* kind_name = kind == MoveKind::flip ? "flip" : "double-flip";
  switch (cmd.format) {
    case Format::json: {
      Json j;
      j["graph"] = cmd.graph;
      j["kind"] = kind_name;
      j["nu"] = nu(g);
      j["acyclic_orientations"] = total;
      Json classes = Json::array();
      for (const auto& cls : part.classes) {
        Json members = Json::array();
        for (auto a : cls) members.push_back(space.render(a));
        classes.push_back(std::move(members));
      }
      j["classes"] = std::move(classes);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "class,orientation\n";
      for (std::size_t c = 0; c < part.classes.size(); ++c)
        for (auto a : part.classes[c]) out << c << ",\"" << space.render(a) << "\"\n";
      break;
    case Format::text:
      out << "graph: " << cmd.graph << "\nacyclic orientations: " << total << "\nnu: " << nu(g) << "\n"
          << kind_name << " classes: " << part.classes.size() << "\n";
      for (std::size_t c = 0; c < part.classes.size(); ++c) {
        out << "class " << c << " (" << part.classes[c].size() << "):\n";
        for (auto a : part.classes[c]) out << "  " << space.render(a) << "\n";
      }
      break;
  }
  return kOk;
}

int run_fs_components(const Command& cmd, const Graph& g, std::ostream& out) {
  const Caps caps = effective_caps(cmd);
  const int n = g.size();
  auto comps = toggle_components(g, caps.fs);
  auto corr = verify_component_correspondence(g, caps);
  auto cyc = verify_component_cycle(g, caps);
  Verdict v1("fs_components_match_double_flip_classes");
  v1.check(corr.pass, [&] { return corr.mismatch; });
  Verdict v2("cyclic_shift_chains_isomorphic_components");
  v2.check(cyc.pass, [&] { return cyc.failure; });

  std::vector<std::vector<std::string>> blocks;
  for (const auto& block : comps.blocks) {
    std::vector<std::string> words;
    for (auto r : block) words.push_back(to_string(unrank(n, r)));
    blocks.push_back(std::move(words));
  }
  switch (cmd.format) {
    case Format::json: {
      Json j;
      j["graph"] = cmd.graph;
      j["n"] = n;
      j["nu"] = nu(g);
      j["components"] = blocks;
      j["cycle_orderings"] = cyc.orderings;
      j["verdicts"] = Json::array({verdict_json(v1), verdict_json(v2)});
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "component,labeling\n";
      for (std::size_t b = 0; b < blocks.size(); ++b)
        for (const auto& w : blocks[b]) out << b << ',' << w << "\n";
      break;
    case Format::text:
      out << "graph: " << cmd.graph << "\ncomponents: " << blocks.size() << "\nnu: " << nu(g) << "\n";
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        out << "component " << b << " (" << blocks[b].size() << "):";
        for (const auto& w : blocks[b]) out << ' ' << w;
        out << "\n";
      }
      for (const auto* v : {&v1, &v2}) {
        out << (v->pass ? "PASS " : "FAIL ") << v->name;
        if (v->counterexample) out << "  counterexample: " << *v->counterexample;
        out << "\n";
      }
      break;
  }
  return v1.pass && v2.pass ? kOk : kTheoremFailure;
}

int run_verify(const Command& cmd, std::ostream& out) {
  const Caps caps = effective_caps(cmd);
  const int threads = thread_count(cmd);
  auto tree_like = [&](ScopeFamily family, int default_max) {
    VerificationScope scope;
    scope.family = family;
    scope.min_n = cmd.min_n.value_or(2);
    scope.max_n = cmd.max_n.value_or(default_max);
    scope.seed = cmd.seed;
    scope.threads = threads;
    scope.caps = caps;
    if (cmd.random_graphs) {
      scope.random_graphs = true;
      scope.graphs_per_n = *cmd.random_graphs;
    }
    if (cmd.samples) scope.labelings_per_graph = *cmd.samples;
    scope.exhaustive_labelings_max_n = cmd.exhaustive_max_n.value_or(caps.census);
    return scope;
  };

  Report report;
  if (cmd.suite == "trees") {
    auto scope = tree_like(ScopeFamily::trees, 6);
    report = merge_reports("trees", {verify_forest_theorem(scope), verify_cpro_order(scope)});
  } else if (cmd.suite == "forests") {
    report = verify_forest_theorem(tree_like(ScopeFamily::forests, 5));
  } else if (cmd.suite == "cpro") {
    report = verify_cpro_order(tree_like(ScopeFamily::trees, 6));
  } else if (cmd.suite == "lemmas") {
    auto scope = lemma_scope(cmd.min_n.value_or(2), cmd.max_n.value_or(7), cmd.seed,
                             cmd.random_graphs.value_or(20));
    scope.threads = threads;
    scope.caps = caps;
    if (cmd.samples) scope.labelings_per_graph = *cmd.samples;
    if (cmd.exhaustive_max_n) scope.exhaustive_labelings_max_n = *cmd.exhaustive_max_n;
    report = verify_lemma_suite(scope);
  } else if (cmd.suite == "fs") {
    const int lo = cmd.min_n.value_or(1), hi = cmd.max_n.value_or(5);
    report = verify_fs_theorems(fs_sweep_graphs(lo, hi, caps), caps, threads);
    report.scope["family"] = "connected graphs and forests";
    report.scope["min_n"] = lo;
    report.scope["max_n"] = hi;
  } else if (cmd.suite == "zeta") {
    CensusOptions opts;
    opts.threads = threads;
    opts.n_cap = caps.census;
    report = verify_zeta_sweep(cmd.min_n.value_or(4), cmd.max_n.value_or(8), opts);
  } else {
    throw UsageError("unknown suite '" + cmd.suite + "' (trees, forests, cpro, lemmas, fs, zeta)");
  }
  emit_report(report, cmd.format, out);
  return report.passed() ? kOk : kTheoremFailure;
}

}  // namespace

Graph parse_graph_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) syntax_error(text.size(), "expected ':' after graph family");
  const auto family = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  const std::size_t base = colon + 1;

  if (family == "path" || family == "cycle" || family == "star" || family == "complete") {
    const int n = parse_number(arg, base);
    GraphFamily f = family == "path"    ? GraphFamily::path
                    : family == "cycle" ? GraphFamily::cycle
                    : family == "star"  ? GraphFamily::star
                                        : GraphFamily::complete;
    return make_generator(f, n);
  }
  if (family == "prufer") {
    std::vector<int> seq;
    std::size_t pos = 0;
    while (pos < arg.size()) {
      auto next = arg.find(',', pos);
      if (next == std::string_view::npos) next = arg.size();
      seq.push_back(parse_number(arg.substr(pos, next - pos), base + pos));
      pos = next + 1;
      if (next + 1 == arg.size()) syntax_error(base + arg.size(), "trailing ','");
    }
    return from_prufer(seq);
  }
  if (family == "edges") {
    const auto semi = arg.find(';');
    const int n = parse_number(arg.substr(0, semi), base);
    std::vector<Edge> edges;
    if (semi != std::string_view::npos) {
      auto list = arg.substr(semi + 1);
      std::size_t pos = 0;
      const std::size_t list_base = base + semi + 1;
      while (pos < list.size()) {
        auto next = list.find(',', pos);
        if (next == std::string_view::npos) next = list.size();
        auto pair = list.substr(pos, next - pos);
        auto dash = pair.find('-');
        if (dash == std::string_view::npos) syntax_error(list_base + pos, "expected u-v");
        edges.emplace_back(parse_number(pair.substr(0, dash), list_base + pos),
                           parse_number(pair.substr(dash + 1), list_base + pos + dash + 1));
        pos = next + 1;
      }
    }
    return from_edge_list(n, edges);
  }
  if (family == "file") return read_edge_list_file(std::string(arg));
  syntax_error(0, "unknown graph family '" + std::string(family) + "'");
}

Command parse_args(int argc, const char* const* argv, std::string* help) {
  Command cmd;
  CLI::App app{"Toric promotion and friends-and-strangers dynamics on graph labelings", "toric"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string format = "text";
  auto add_common = [&](CLI::App* sub, bool needs_graph) {
    auto* g = sub->add_option("--graph", cmd.graph,
                              "path:N | cycle:N | star:N | complete:N | prufer:a,b,... | "
                              "edges:N;u-v,... | file:PATH");
    if (needs_graph) g->required();
    sub->add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--threads", cmd.threads, "Worker threads (default: all cores)");
    sub->add_option("--seed", cmd.seed, "Seed for sampled scopes");
    sub->add_option("--max-n", cmd.max_n, "Enumeration cap override / scope upper bound");
    sub->add_option("--out", cmd.out, "Write the report to FILE");
  };

  auto* step = app.add_subcommand("step", "Apply an operator to a labeling");
  add_common(step, true);
  step->add_option("--op", cmd.op, "Operator (default tpro)");
  step->add_option("--labeling", cmd.labeling, "Labeling word, e.g. 45123")->required();
  step->add_option("--steps", cmd.steps, "Number of applications");
  step->add_flag("--trace", cmd.trace, "Print every primitive toggle and shift");

  auto* orb = app.add_subcommand("orbit", "List the orbit of a labeling");
  add_common(orb, true);
  orb->add_option("--op", cmd.op, "Operator (default tpro)");
  orb->add_option("--labeling", cmd.labeling, "Starting labeling")->required();

  auto* cen = app.add_subcommand("census", "Orbit-size census over all labelings");
  add_common(cen, true);
  cen->add_option("--op", cmd.op, "Operator (default tpro)");

  auto* ord = app.add_subcommand("order", "Order of an operator on all labelings");
  add_common(ord, true);
  ord->add_option("--op", cmd.op, "Operator (default tpro)");

  auto* fc = app.add_subcommand("flip-classes", "Flip equivalence classes of Acyc(G)");
  add_common(fc, true);
  auto* dfc = app.add_subcommand("double-flip-classes", "Double-flip equivalence classes of Acyc(G)");
  add_common(dfc, true);
  auto* fsc = app.add_subcommand("fs-components", "Components of FS(complement(G), Cycle_n)");
  add_common(fsc, true);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  add_common(ver, false);
  ver->add_option("--suite", cmd.suite, "trees | forests | cpro | lemmas | fs | zeta")->required();
  ver->add_option("--min-n", cmd.min_n, "Smallest n in scope");
  ver->add_option("--random", cmd.random_graphs, "Random graphs per n instead of exhaustive");
  ver->add_option("--samples", cmd.samples, "Sampled labelings per graph above the exhaustive bound");
  ver->add_option("--exhaustive-max-n", cmd.exhaustive_max_n, "Largest n with exhaustive labelings");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    throw;
  } catch (const CLI::CallForAllHelp&) {
    if (help) *help = app.help("", CLI::AppFormatMode::All);
    throw;
  }
  for (auto* sub : app.get_subcommands()) cmd.verb = sub->get_name();
  cmd.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (cmd.out) {
    file.open(*cmd.out);
    if (!file) {
      err << "error: cannot open " << *cmd.out << "\n";
      return kUsage;
    }
    sink = &file;
  }
  try {
    if (cmd.verb == "verify") return run_verify(cmd, *sink);
    const Graph g = parse_graph_spec(cmd.graph);
    if (cmd.verb == "step") return run_step(cmd, g, *sink);
    if (cmd.verb == "orbit") return run_orbit(cmd, g, *sink);
    if (cmd.verb == "census") return run_census(cmd, g, *sink, false);
    if (cmd.verb == "order") return run_census(cmd, g, *sink, true);
    if (cmd.verb == "flip-classes") return run_classes(cmd, g, *sink, MoveKind::flip);
    if (cmd.verb == "double-flip-classes") return run_classes(cmd, g, *sink, MoveKind::double_flip);
    if (cmd.verb == "fs-components") return run_fs_components(cmd, g, *sink);
    err << "error: unknown command '" << cmd.verb << "'\n";
    return kUsage;
  } catch (const ToricError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise with --max-n or " << kCapsEnvVar << ")\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::string help;
  Command cmd;
  try {
    cmd = parse_args(argc, argv, &help);
  } catch (const CLI::CallForHelp&) {
    out << help;
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << help;
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ToricError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return run(cmd, out, err);
}

}  // namespace toric::cli
