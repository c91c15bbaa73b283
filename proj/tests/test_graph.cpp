#include <doctest.h>

#include <functional>
#include <set>
#include <sstream>

#include "toric/graph.hpp"

using namespace toric;

namespace {

std::vector<Edge> E(std::initializer_list<Edge> es) { return es; }

// Independent acyclicity test: DFS looking for a back edge.
bool has_cycle_dfs(const Graph& g) {
  std::vector<int> parent(g.size(), -2);
  std::function<bool(int, int)> dfs = [&](int v, int from) {
    parent[v] = from;
    for (int w : g.neighbors(v)) {
      if (w == from) continue;
      if (parent[w] != -2) return true;
      if (dfs(w, v)) return true;
    }
    return false;
  };
  for (int v = 0; v < g.size(); ++v)
    if (parent[v] == -2 && dfs(v, -1)) return true;
  return false;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(make_generator(GraphFamily::path, 5).edges() == E({{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  CHECK(make_generator(GraphFamily::cycle, 3).edges() == E({{0, 1}, {0, 2}, {1, 2}}));
  CHECK(make_generator(GraphFamily::cycle, 2).edges() == E({{0, 1}}));
  CHECK(make_generator(GraphFamily::star, 4).edges() == E({{0, 1}, {0, 2}, {0, 3}}));
  CHECK(make_generator(GraphFamily::complete, 5).edge_count() == 10);
  CHECK(make_generator(GraphFamily::path, 1).edge_count() == 0);
  CHECK_THROWS_AS(make_generator(GraphFamily::path, 0), ToricError);
  CHECK_THROWS_AS(make_generator(GraphFamily::cycle, 1), ToricError);
}

TEST_CASE("from_edge_list normalizes and validates") {
  auto g = from_edge_list(3, E({{0, 1}}));
  CHECK(g.size() == 3);
  CHECK(g.degree(2) == 0);
  CHECK(from_edge_list(2, E({{0, 1}, {1, 0}})).edge_count() == 1);
  CHECK_THROWS_AS(from_edge_list(3, E({{0, 0}})), ToricError);
  CHECK_THROWS_AS(from_edge_list(3, E({{0, 3}})), ToricError);
  auto h = from_edge_list(4, E({{3, 1}, {2, 0}, {1, 0}}));
  CHECK(h.edges() == E({{0, 1}, {0, 2}, {1, 3}}));
  CHECK(h.edge_index(3, 1) == 2);
  CHECK(h.edge_index(2, 3) == -1);
  CHECK(h.adjacent(1, 3));
  CHECK_FALSE(h.adjacent(2, 3));
}

TEST_CASE("from_prufer") {
  CHECK(from_prufer(std::vector<int>{}).edges() == E({{0, 1}}));
  CHECK(from_prufer(std::vector<int>{0, 0}) == make_generator(GraphFamily::star, 4));
  CHECK(from_prufer(std::vector<int>{1, 2}) == make_generator(GraphFamily::path, 4));
  CHECK_THROWS_AS(from_prufer(std::vector<int>{5}), ToricError);
}

TEST_CASE("complement") {
  CHECK(complement(make_generator(GraphFamily::complete, 4)).edge_count() == 0);
  CHECK(complement(make_generator(GraphFamily::path, 3)).edges() == E({{0, 2}}));
  CHECK(complement(Graph(3, {})) == make_generator(GraphFamily::cycle, 3));
  for (int n = 1; n <= 6; ++n) {
    auto p = make_generator(GraphFamily::path, n);
    CHECK(complement(complement(p)) == p);
    CHECK(p.edge_count() + complement(p).edge_count() == std::size_t(n * (n - 1) / 2));
  }
}

TEST_CASE("connected_components") {
  auto one = connected_components(make_generator(GraphFamily::path, 4));
  REQUIRE(one.blocks.size() == 1);
  CHECK(one.blocks[0] == std::vector<Vertex>{0, 1, 2, 3});
  auto two = connected_components(from_edge_list(3, E({{0, 1}})));
  CHECK(two.blocks == std::vector<std::vector<Vertex>>{{0, 1}, {2}});
  CHECK(two.block_of(2) == 1);
  CHECK(connected_components(Graph(3, {})).blocks.size() == 3);
}

TEST_CASE("is_forest / is_connected") {
  CHECK(is_forest(make_generator(GraphFamily::path, 5)));
  CHECK_FALSE(is_forest(make_generator(GraphFamily::cycle, 4)));
  CHECK(is_forest(make_generator(GraphFamily::star, 6)));
  CHECK(is_forest(Graph(4, {})));
  CHECK(is_connected(make_generator(GraphFamily::cycle, 4)));
  CHECK_FALSE(is_connected(from_edge_list(3, E({{0, 1}}))));
}

TEST_CASE("tree_path") {
  CHECK(tree_path(make_generator(GraphFamily::path, 4), 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(tree_path(make_generator(GraphFamily::path, 4), 2, 2) == std::vector<Vertex>{2});
  CHECK(tree_path(make_generator(GraphFamily::star, 5), 1, 3) == std::vector<Vertex>{1, 0, 3});
  CHECK_THROWS_AS(tree_path(make_generator(GraphFamily::cycle, 4), 0, 2), ToricError);
  CHECK_THROWS_AS(tree_path(from_edge_list(3, E({{0, 1}})), 0, 2), ToricError);
}

TEST_CASE("TreeEnumerator matches Cayley and yields distinct trees") {
  CHECK(TreeEnumerator(2).size() == 1);
  CHECK(TreeEnumerator(4).size() == 16);
  CHECK(TreeEnumerator(6).size() == 1296);
  for (int n = 2; n <= 6; ++n) {
    TreeEnumerator trees(n);
    CHECK(trees.size() == ipow(n, n - 2));
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t i = 0; i < trees.size(); ++i) {
      auto t = trees[i];
      CHECK(t.edge_count() == std::size_t(n - 1));
      CHECK(is_connected(t));
      seen.insert(t.edges());
    }
    CHECK(seen.size() == trees.size());
  }
  CHECK_THROWS_AS(TreeEnumerator(9), CapExceeded);
}

TEST_CASE("ForestEnumerator matches a brute-force subset count") {
  CHECK(ForestEnumerator(2).size() == 2);
  CHECK(ForestEnumerator(3).size() == 7);
  for (int n = 1; n <= 5; ++n) {
    auto kn = make_generator(GraphFamily::complete, n).edges();
    std::uint64_t brute = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kn.size()); ++mask) {
      std::vector<Edge> chosen;
      for (std::size_t e = 0; e < kn.size(); ++e)
        if (mask >> e & 1) chosen.push_back(kn[e]);
      if (!has_cycle_dfs(Graph(n, chosen))) ++brute;
    }
    ForestEnumerator forests(n);
    CHECK(forests.size() == brute);
    for (std::uint64_t i = 0; i < forests.size(); ++i) CHECK(is_forest(forests[i]));
  }
  // Labeled forest counts 1, 2, 7, 38, 291.
  CHECK(ForestEnumerator(4).size() == 38);
  CHECK(ForestEnumerator(5).size() == 291);
}

TEST_CASE("is_forest agrees with DFS cycle detection on all graphs up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    auto kn = make_generator(GraphFamily::complete, n).edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kn.size()); ++mask) {
      std::vector<Edge> chosen;
      for (std::size_t e = 0; e < kn.size(); ++e)
        if (mask >> e & 1) chosen.push_back(kn[e]);
      Graph g(n, chosen);
      CHECK(is_forest(g) == !has_cycle_dfs(g));
    }
  }
}

TEST_CASE("enumerate_connected_graphs counts labeled connected graphs") {
  const std::uint64_t expected[] = {0, 1, 1, 4, 38, 728};
  for (int n = 1; n <= 5; ++n) {
    auto graphs = enumerate_connected_graphs(n);
    CHECK(graphs.size() == expected[n]);
    for (const auto& g : graphs) CHECK(is_connected(g));
  }
}

TEST_CASE("read_edge_list") {
  std::istringstream ok("# a star\n4\n0 1\n\n0 2\n# comment\n3 0\n");
  CHECK(read_edge_list(ok) == make_generator(GraphFamily::star, 4));
  std::istringstream bad("3\n0 1\n1 x\n");
  CHECK_THROWS_WITH_AS(read_edge_list(bad), doctest::Contains("line 3"), ToricError);
  std::istringstream loop("3\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), ToricError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_edge_list(empty), ToricError);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), ToricError);
}
