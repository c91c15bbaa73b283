#include "toric/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>

#include "toric/dynamics.hpp"
#include "toric/orientation.hpp"
#include "toric/parallel.hpp"

namespace toric {

namespace {

class AtomicBitset {
 public:
  explicit AtomicBitset(std::uint64_t bits) : words_((bits + 63) / 64) {}

  bool test(std::uint64_t i) const {
    return words_[i >> 6].load(std::memory_order_relaxed) >> (i & 63) & 1;
  }

  /// Sets bit i; returns whether it was already set.
  bool set(std::uint64_t i) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    return words_[i >> 6].fetch_or(mask, std::memory_order_acq_rel) & mask;
  }

 private:
  std::vector<std::atomic<std::uint64_t>> words_;
};

void check_census_cap(int n, int cap) {
  if (n > cap)
    throw CapExceeded("census: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                      " (" + std::to_string(n) + "! labelings)");
}

std::uint64_t orbit_length(const Graph& g, const Program& p, const Labeling& s, std::uint64_t limit) {
  Labeling cur = s;
  for (std::uint64_t len = 1; len <= limit; ++len) {
    p.apply(g, cur);
    if (cur == s) return len;
  }
  throw std::logic_error("orbit did not close within " + std::to_string(limit) + " steps");
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                    static_cast<std::uint32_t>(c)};
  return std::mt19937_64(seq);
}

std::string at(const Graph& g, const Labeling& s) {
  return g.describe() + " labeling " + to_string(s);
}

/// Runs `per_graph` over every graph of the scope in parallel and merges the
/// verdicts in graph order.
template <class PerGraph>
Report sweep(const VerificationScope& scope, std::string suite, std::vector<Verdict> names,
             PerGraph&& per_graph) {
  Report report;
  report.suite = std::move(suite);
  report.scope = scope.describe();
  report.seed = scope.seed;
  const auto graphs = scope.materialize();
  report.graphs = graphs.size();
  std::vector<std::vector<Verdict>> results(graphs.size());
  std::vector<std::uint64_t> counts(graphs.size(), 0);
  parallel_for(graphs.size(), scope.threads, [&](std::uint64_t gi) {
    std::vector<Verdict> vs = names;
    counts[gi] = per_graph(graphs[gi], gi, vs);
    results[gi] = std::move(vs);
  });
  report.verdicts = std::move(names);
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    report.labelings += counts[gi];
    for (std::size_t v = 0; v < report.verdicts.size(); ++v) report.verdicts[v].merge(results[gi][v]);
  }
  return report;
}

}  // namespace

std::vector<Labeling> orbit(const Graph& g, const OperatorSpec& op, const Labeling& s) {
  if (g.size() != s.size()) throw ToricError("labeling size does not match graph");
  Program p(op, s.size());
  std::vector<Labeling> out{s};
  Labeling cur = s;
  for (;;) {
    p.apply(g, cur);
    if (cur == s) return out;
    out.push_back(cur);
  }
}

CensusReport census(const Graph& g, const OperatorSpec& op, const CensusOptions& options) {
  const int n = g.size();
  check_census_cap(n, options.n_cap);
  Program program(op, n);
  CensusReport report;
  report.graph = g.describe();
  report.n = n;
  report.op = op.describe();
  const std::uint64_t total = factorial(n);
  report.labelings = total;
  if (options.per_rank_sizes) report.size_of_rank.assign(total, 0);

  AtomicBitset visited(total);
  std::mutex mutex;
  std::vector<OrbitRecord> records;

  parallel_for(total, options.threads, [&](std::uint64_t start) {
    if (visited.test(start)) return;
    Labeling cur = unrank(n, start);
    const Labeling first = cur;
    std::vector<std::uint64_t> ranks{start};
    for (;;) {
      program.apply(g, cur);
      if (cur == first) break;
      ranks.push_back(rank(cur));
      if (ranks.size() > total) throw std::logic_error("census: operator is not a bijection");
    }
    const std::uint64_t rep = *std::min_element(ranks.begin(), ranks.end());
    // Whoever sets the representative's bit owns the orbit.
    if (visited.set(rep)) return;
    for (std::uint64_t r : ranks) visited.set(r);
    if (options.per_rank_sizes)
      for (std::uint64_t r : ranks) report.size_of_rank[r] = static_cast<std::uint32_t>(ranks.size());
    std::lock_guard lock(mutex);
    records.push_back({rep, ranks.size()});
  });

  std::sort(records.begin(), records.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) { return a.representative < b.representative; });
  for (const auto& rec : records) ++report.orbit_sizes[rec.size];
  report.orbits = std::move(records);
  report.order = lcm_of_sizes(report.orbit_sizes);

  Verdict conservation("census_conservation");
  std::uint64_t sum = 0;
  for (auto [size, count] : report.orbit_sizes) sum += size * count;
  conservation.check(sum == total, [&] {
    return "sum of size*count is " + std::to_string(sum) + ", expected " + std::to_string(total);
  });
  report.verdicts.push_back(std::move(conservation));
  return report;
}

BigInt lcm_of_sizes(const std::map<std::uint64_t, std::uint64_t>& orbit_sizes) {
  BigInt result = 1;
  for (const auto& entry : orbit_sizes) {
    BigInt size = entry.first;
    result = result / boost::multiprecision::gcd(result, size) * size;
  }
  return result;
}

BigInt operator_order(const Graph& g, const OperatorSpec& op, const CensusOptions& options) {
  return census(g, op, options).order;
}

std::uint64_t predicted_orbit_size(const Graph& g, const Labeling& s) {
  const int n = g.size();
  if (n < 2) throw ToricError("predicted orbit size needs n >= 2");
  if (s.size() != n) throw ToricError("labeling size does not match graph");
  if (!is_forest(g)) throw ToricError("predicted orbit size needs a forest");
  auto parts = connected_components(g);
  const auto t = static_cast<std::uint64_t>(parts.blocks[parts.block_of(s.vertex_of(1))].size());
  const auto nn = static_cast<std::uint64_t>(n);
  return (nn - 1) * t / std::gcd(t, nn);
}

nlohmann::ordered_json census_json(const CensusReport& r) {
  nlohmann::ordered_json j;
  j["graph"] = r.graph;
  j["n"] = r.n;
  j["operator"] = r.op;
  auto sizes = nlohmann::ordered_json::object();
  for (auto [size, count] : r.orbit_sizes) sizes[std::to_string(size)] = count;
  j["orbit_sizes"] = std::move(sizes);
  j["order"] = r.order.str();
  j["labelings"] = r.labelings;
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v));
  j["verdicts"] = std::move(verdicts);
  j["seed"] = r.seed;
  return j;
}

CensusReport census_from_json(const nlohmann::ordered_json& j) {
  CensusReport r;
  r.graph = j.at("graph").get<std::string>();
  r.n = j.at("n").get<int>();
  r.op = j.at("operator").get<std::string>();
  for (const auto& [key, value] : j.at("orbit_sizes").items())
    r.orbit_sizes[std::stoull(key)] = value.get<std::uint64_t>();
  r.order = BigInt(j.at("order").get<std::string>());
  r.labelings = j.at("labelings").get<std::uint64_t>();
  for (const auto& v : j.at("verdicts")) {
    Verdict verdict(v.at("name").get<std::string>());
    verdict.pass = v.at("pass").get<bool>();
    if (!v.at("counterexample").is_null()) verdict.counterexample = v.at("counterexample").get<std::string>();
    r.verdicts.push_back(std::move(verdict));
  }
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw ToricError("random tree needs n >= 2");
  auto rng = make_rng(seed, static_cast<std::uint64_t>(n), 0, 0x7ee);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(rng);
  return from_prufer(seq);
}

VerificationScope lemma_scope(int min_n, int max_n, std::uint64_t seed, std::uint64_t random_trees) {
  VerificationScope scope;
  scope.family = ScopeFamily::explicit_graphs;
  scope.min_n = min_n;
  scope.max_n = max_n;
  scope.seed = seed;
  scope.exhaustive_labelings_max_n = 5;
  scope.labelings_per_graph = 1000;
  for (int n = std::max(min_n, 2); n <= max_n; ++n) {
    scope.graphs.push_back(make_generator(GraphFamily::path, n));
    scope.graphs.push_back(make_generator(GraphFamily::star, n));
    for (std::uint64_t i = 0; i < random_trees; ++i) {
      auto rng = make_rng(seed, static_cast<std::uint64_t>(n), i, 0x1e3);
      scope.graphs.push_back(random_tree(n, rng()));
    }
  }
  return scope;
}

std::vector<Graph> VerificationScope::materialize() const {
  std::vector<Graph> out;
  if (family == ScopeFamily::explicit_graphs) return graphs;
  for (int n = std::max(min_n, family == ScopeFamily::trees ? 2 : 1); n <= max_n; ++n) {
    if (!random_graphs) {
      if (family == ScopeFamily::trees) {
        TreeEnumerator trees(n, caps.trees);
        for (std::uint64_t i = 0; i < trees.size(); ++i) out.push_back(trees[i]);
      } else {
        ForestEnumerator forests(n, caps.forests);
        for (std::uint64_t i = 0; i < forests.size(); ++i) out.push_back(forests[i]);
      }
      continue;
    }
    for (std::uint64_t i = 0; i < graphs_per_n; ++i) {
      if (n < 2) {
        out.push_back(make_generator(GraphFamily::path, n));
        break;
      }
      auto rng = make_rng(seed, static_cast<std::uint64_t>(n), i, 0x9a4);
      Graph tree = random_tree(n, rng());
      if (family == ScopeFamily::trees) {
        out.push_back(std::move(tree));
        continue;
      }
      std::vector<Edge> kept;
      for (const auto& e : tree.edges())
        if (rng() & 1) kept.push_back(e);
      out.emplace_back(n, kept);
    }
  }
  return out;
}

nlohmann::ordered_json VerificationScope::describe() const {
  nlohmann::ordered_json j;
  switch (family) {
    case ScopeFamily::trees: j["family"] = "trees"; break;
    case ScopeFamily::forests: j["family"] = "forests"; break;
    case ScopeFamily::explicit_graphs: j["family"] = "explicit"; break;
  }
  if (family != ScopeFamily::explicit_graphs) {
    j["min_n"] = min_n;
    j["max_n"] = max_n;
    j["graphs"] = random_graphs ? "random" : "exhaustive";
    if (random_graphs) j["graphs_per_n"] = graphs_per_n;
  } else {
    j["graph_count"] = graphs.size();
  }
  j["exhaustive_labelings_max_n"] = exhaustive_labelings_max_n;
  j["labelings_per_graph"] = labelings_per_graph;
  return j;
}

std::vector<Labeling> scope_labelings(const VerificationScope& scope, const Graph& g,
                                      std::uint64_t graph_index) {
  const int n = g.size();
  std::vector<Labeling> out;
  if (n <= scope.exhaustive_labelings_max_n) {
    check_census_cap(n, scope.caps.census);
    const std::uint64_t total = factorial(n);
    out.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) out.push_back(unrank(n, r));
    return out;
  }
  auto rng = make_rng(scope.seed, static_cast<std::uint64_t>(n), graph_index, 0x1ab);
  std::vector<Label> word(n);
  for (std::uint64_t i = 0; i < scope.labelings_per_graph; ++i) {
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng);
    out.emplace_back(word);
  }
  return out;
}

Report verify_forest_theorem(const VerificationScope& scope) {
  std::vector<Verdict> names{Verdict("orbit_size_equals_formula"),
                             Verdict("orbit_size_divisible_by_n_minus_1"),
                             Verdict("tree_tpro_power_n_minus_1_is_identity")};
  return sweep(scope, "forest-theorem", names, [&](const Graph& g, std::uint64_t gi, auto& vs) {
    const int n = g.size();
    if (!is_forest(g)) throw ToricError("forest theorem scope contains a non-forest: " + g.describe());
    const bool tree = is_connected(g);
    const auto tpro = OperatorSpec::toric_promotion();
    Program step(tpro, n);
    const auto nn = static_cast<std::uint64_t>(n);

    auto check_one = [&](const Labeling& s, std::uint64_t measured) {
      const std::uint64_t predicted = predicted_orbit_size(g, s);
      vs[0].check(measured == predicted, [&] {
        return at(g, s) + " measured " + std::to_string(measured) + " predicted " +
               std::to_string(predicted);
      });
      vs[1].check(measured % (nn - 1) == 0,
                  [&] { return at(g, s) + " orbit size " + std::to_string(measured); });
      if (tree) {
        Labeling cur = s;
        for (int i = 0; i < n - 1; ++i) step.apply(g, cur);
        vs[2].check(cur == s, [&] { return at(g, s) + " maps to " + to_string(cur); });
      }
    };

    if (n <= scope.exhaustive_labelings_max_n) {
      CensusOptions opts;
      opts.n_cap = scope.caps.census;
      opts.per_rank_sizes = true;
      auto report = census(g, tpro, opts);
      for (std::uint64_t r = 0; r < report.labelings; ++r) check_one(unrank(n, r), report.size_of_rank[r]);
      return report.labelings;
    }
    auto labelings = scope_labelings(scope, g, gi);
    for (const auto& s : labelings) check_one(s, orbit_length(g, step, s, factorial(std::min(n, 20))));
    return static_cast<std::uint64_t>(labelings.size());
  });
}

Report verify_cpro_order(const VerificationScope& scope) {
  std::vector<Verdict> names{Verdict("cpro_orbit_size_equals_n")};
  return sweep(scope, "cpro-order", names, [&](const Graph& g, std::uint64_t gi, auto& vs) {
    const int n = g.size();
    if (!is_forest(g) || !is_connected(g)) throw ToricError("cPro order scope needs trees: " + g.describe());
    const auto cp = OperatorSpec::cpro();
    if (n <= scope.exhaustive_labelings_max_n) {
      CensusOptions opts;
      opts.n_cap = scope.caps.census;
      auto report = census(g, cp, opts);
      for (const auto& rec : report.orbits) {
        vs[0].check(rec.size == static_cast<std::uint64_t>(n), [&] {
          return at(g, unrank(n, rec.representative)) + " cPro orbit size " + std::to_string(rec.size);
        });
      }
      return report.labelings;
    }
    Program step(cp, n);
    auto labelings = scope_labelings(scope, g, gi);
    for (const auto& s : labelings) {
      auto len = orbit_length(g, step, s, factorial(std::min(n, 20)));
      vs[0].check(len == static_cast<std::uint64_t>(n),
                  [&] { return at(g, s) + " cPro orbit size " + std::to_string(len); });
    }
    return static_cast<std::uint64_t>(labelings.size());
  });
}

Report verify_lemma_suite(const VerificationScope& scope) {
  std::vector<Verdict> names{Verdict("toggle_involution"),
                             Verdict("shift_toggle_relation"),
                             Verdict("factored_tpro_power"),
                             Verdict("jdt_slide_equals_cpro"),
                             Verdict("forest_single_path_power"),
                             Verdict("shifted_toggle_map_commutes_with_tpro"),
                             Verdict("promotion_preserves_orientation")};
  return sweep(scope, "lemmas", names, [&](const Graph& g, std::uint64_t gi, auto& vs) {
    const int n = g.size();
    if (n < 2) return std::uint64_t{0};
    const bool forest = is_forest(g);
    OrientationSpace space(g, scope.caps.edges);
    auto labelings = scope_labelings(scope, g, gi);
    for (const auto& s : labelings) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          vs[0].check(toggle(g, toggle(g, s, i, j), i, j) == s,
                      [&] { return at(g, s) + " i=" + std::to_string(i) + " j=" + std::to_string(j); });
        }
        vs[1].check(cyclic_shift(simple_toggle(g, s, i), 1) == simple_toggle(g, cyclic_shift(s, 1), i + 1),
                    [&] { return at(g, s) + " i=" + std::to_string(i); });
      }

      // TPro^p for p up to (n-1)*3 + n-2, built incrementally.
      std::vector<Labeling> tpro_powers{s};
      for (int p = 1; p <= (n - 1) * 3 + n - 2; ++p) tpro_powers.push_back(toric_promotion(g, tpro_powers.back()));
      for (int blocks = 0; blocks <= 3; ++blocks) {
        for (int k = 0; k <= n - 2; ++k) {
          const auto got = factored_tpro_power(g, s, static_cast<std::uint64_t>(blocks), k);
          vs[2].check(got == tpro_powers[(n - 1) * blocks + k], [&] {
            return at(g, s) + " s=" + std::to_string(blocks) + " k=" + std::to_string(k);
          });
        }
      }

      vs[3].check(jdt_slide(g, s, cpro_path(g, s)) == cpro(g, s), [&] { return at(g, s); });

      if (forest) {
        Labeling power = s;
        for (int l = 0; l <= 2 * n; ++l) {
          auto path = forest_power_path(g, s, static_cast<std::uint64_t>(l));
          vs[4].check(path.front() == s.vertex_of(1) && jdt_slide(g, s, path) == power,
                      [&] { return at(g, s) + " l=" + std::to_string(l); });
          power = cpro(g, power);
        }
      }

      const Labeling ts = toric_promotion(g, s);
      for (int m = 0; m < n; ++m) {
        // tau_1 ... tau_m c^m: shift first, then tau_m down to tau_1.
        auto shifted_map = [&](const Labeling& x) {
          Labeling y = cyclic_shift(x, m);
          for (int i = m; i >= 1; --i) inplace::simple_toggle(g, y, i);
          return y;
        };
        vs[5].check(shifted_map(ts) == toric_promotion(g, shifted_map(s)),
                    [&] { return at(g, s) + " m=" + std::to_string(m); });
      }

      vs[6].check(space.induced(promotion(g, s)) == space.induced(s), [&] { return at(g, s); });
    }
    return static_cast<std::uint64_t>(labelings.size());
  });
}

ZetaRow verify_zeta_conjecture(int n, int h, const CensusOptions& options) {
  ZetaRow row;
  row.n = n;
  row.h = h;
  row.expected = static_cast<std::uint64_t>(h) * static_cast<std::uint64_t>(n - h);
  row.order = operator_order(make_generator(GraphFamily::path, n), OperatorSpec::zeta(n, h), options);
  row.match = row.order == row.expected;
  return row;
}

Report verify_zeta_sweep(int min_n, int max_n, const CensusOptions& options) {
  Report report;
  report.suite = "zeta";
  report.scope["family"] = "paths";
  report.scope["min_n"] = min_n;
  report.scope["max_n"] = max_n;
  Verdict h1("h1_order_equals_n_minus_1");
  Verdict conj("order_equals_h_times_n_minus_h", true);
  for (int n = std::max(min_n, 2); n <= max_n; ++n) {
    ++report.graphs;
    for (int h = 1; h <= n / 2; ++h) {
      auto row = verify_zeta_conjecture(n, h, options);
      report.labelings += factorial(n);
      nlohmann::ordered_json j;
      j["n"] = n;
      j["h"] = h;
      j["order"] = row.order.str();
      j["expected"] = row.expected;
      j["match"] = row.match;
      report.rows.push_back(std::move(j));
      auto where = [&] {
        return "path:" + std::to_string(n) + " h=" + std::to_string(h) + " order " + row.order.str() +
               " expected " + std::to_string(row.expected);
      };
      if (h == 1) h1.check(row.match, where);
      conj.check(row.match, where);
    }
  }
  report.verdicts = {h1, conj};
  return report;
}

std::set<int> match_conjugacy_class(const Graph& g, const std::vector<int>& pi,
                                    const CensusOptions& options) {
  const int n = g.size();
  auto target = census(g, OperatorSpec::toric_promotion_pi(pi), options).orbit_sizes;
  std::set<int> out;
  for (int h = 1; h <= n / 2; ++h)
    if (census(g, OperatorSpec::zeta(n, h), options).orbit_sizes == target) out.insert(h);
  return out;
}

}  // namespace toric
