#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "toric/caps.hpp"
#include "toric/graph.hpp"
#include "toric/labeling.hpp"
#include "toric/operator.hpp"
#include "toric/report.hpp"

namespace toric {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultSeed = 20210806;

/// sigma, op(sigma), op^2(sigma), ... up to (not including) the return to
/// sigma.
std::vector<Labeling> orbit(const Graph& g, const OperatorSpec& op, const Labeling& s);

struct OrbitRecord {
  std::uint64_t representative;  // smallest rank in the orbit
  std::uint64_t size;
};

struct CensusOptions {
  int threads = 1;
  int n_cap = 10;
  bool per_rank_sizes = false;  // fill CensusReport::size_of_rank
};

struct CensusReport {
  std::string graph;
  int n = 0;
  std::string op;
  std::map<std::uint64_t, std::uint64_t> orbit_sizes;  // size -> count
  BigInt order = 0;
  std::uint64_t labelings = 0;
  std::vector<Verdict> verdicts;
  std::uint64_t seed = kDefaultSeed;

  std::vector<OrbitRecord> orbits;         // sorted by representative
  std::vector<std::uint32_t> size_of_rank;  // only with per_rank_sizes
};

/// Visits every labeling once and records each orbit exactly once. The result
/// does not depend on the thread count.
CensusReport census(const Graph& g, const OperatorSpec& op, const CensusOptions& options = {});

/// lcm of all orbit sizes.
BigInt operator_order(const Graph& g, const OperatorSpec& op, const CensusOptions& options = {});

BigInt lcm_of_sizes(const std::map<std::uint64_t, std::uint64_t>& orbit_sizes);

/// (n-1) t / gcd(t, n) where t is the size of the component holding the
/// vertex labeled 1. G must be a forest with n >= 2.
std::uint64_t predicted_orbit_size(const Graph& g, const Labeling& s);

nlohmann::ordered_json census_json(const CensusReport& r);
CensusReport census_from_json(const nlohmann::ordered_json& j);

enum class ScopeFamily { trees, forests, explicit_graphs };

/// Which graphs and labelings a verification sweep covers.
struct VerificationScope {
  int min_n = 2;
  int max_n = 6;
  ScopeFamily family = ScopeFamily::trees;
  std::vector<Graph> graphs;  // explicit_graphs only

  /// Random graphs per n instead of exhaustive enumeration (trees, forests).
  bool random_graphs = false;
  std::uint64_t graphs_per_n = 200;

  /// Labelings are exhaustive up to this n, sampled above it.
  int exhaustive_labelings_max_n = 10;
  std::uint64_t labelings_per_graph = 1000;

  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  Caps caps;

  std::vector<Graph> materialize() const;
  nlohmann::ordered_json describe() const;
};

/// For each n in [min_n, max_n]: the path and star on n vertices plus
/// `random_trees` seeded random trees. Labelings are exhaustive up to n = 5
/// and sampled above.
VerificationScope lemma_scope(int min_n, int max_n, std::uint64_t seed,
                              std::uint64_t random_trees = 20);

/// Random labeled tree via a uniform Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// Labelings checked for graph `g`: every labeling when exhaustive, else a
/// reproducible sample.
std::vector<Labeling> scope_labelings(const VerificationScope& scope, const Graph& g,
                                      std::uint64_t graph_index);

/// Checks the TPro orbit size formula on every forest in scope. On trees it
/// also checks that TPro^{n-1} is the identity.
Report verify_forest_theorem(const VerificationScope& scope);

/// Every c o Pro orbit on a tree has size n.
Report verify_cpro_order(const VerificationScope& scope);

/// Lemma-level identities: shift/toggle relation, factored TPro powers, the
/// jeu-de-taquin description of c o Pro, single-path powers on forests, and
/// commutation of tau_1..tau_m c^m with TPro.
Report verify_lemma_suite(const VerificationScope& scope);

struct ZetaRow {
  int n = 0;
  int h = 0;
  BigInt order = 0;
  std::uint64_t expected = 0;
  bool match = false;
};

/// Order of TPro_{zeta(h)} on path:n against h(n-h).
ZetaRow verify_zeta_conjecture(int n, int h, const CensusOptions& options = {});

/// All (n, h) with min_n <= n <= max_n, 1 <= h <= n/2. Mismatches are
/// conjecture findings; an h = 1 mismatch is a theorem violation.
Report verify_zeta_sweep(int min_n, int max_n, const CensusOptions& options = {});

/// h values whose TPro_{zeta(h)} has the same orbit-size multiset as TPro_pi.
std::set<int> match_conjugacy_class(const Graph& g, const std::vector<int>& pi,
                                    const CensusOptions& options = {});

}  // namespace toric
