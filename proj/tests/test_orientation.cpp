#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <set>

#include "toric/orientation.hpp"

using namespace toric;

namespace {

Graph path(int n) { return make_generator(GraphFamily::path, n); }
Graph edge() { return path(2); }
Graph triangle() { return make_generator(GraphFamily::cycle, 3); }

// Chromatic polynomial by deletion-contraction, coefficients low to high.
using Poly = std::vector<long long>;

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

Poly chromatic(int n, std::set<std::pair<int, int>> edges) {
  if (edges.empty()) {
    Poly p(n + 1, 0);
    p[n] = 1;
    return p;
  }
  auto [u, v] = *edges.begin();
  auto deleted = edges;
  deleted.erase(deleted.begin());
  // Contract v into u, then renumber vertex n-1 into v's slot.
  std::set<std::pair<int, int>> contracted;
  for (auto [a, b] : deleted) {
    if (a == v) a = u;
    if (b == v) b = u;
    if (a == n - 1) a = v;
    if (b == n - 1) b = v;
    if (a == b) continue;
    contracted.insert({std::min(a, b), std::max(a, b)});
  }
  return sub(chromatic(n, deleted), chromatic(n - 1, contracted));
}

Poly chromatic(const Graph& g) { return chromatic(g.size(), {g.edges().begin(), g.edges().end()}); }

long long eval(const Poly& p, long long x) {
  long long r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// Acyclicity by DFS colouring over the directed edge list.
bool acyclic_dfs(const OrientationSpace& space, Orientation a) {
  const auto& g = space.graph();
  std::vector<std::vector<int>> out(g.size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto [u, v] = g.edges()[e];
    if (a.bits >> e & 1) std::swap(u, v);
    out[u].push_back(v);
  }
  std::vector<int> colour(g.size(), 0);
  std::function<bool(int)> visit = [&](int v) {
    colour[v] = 1;
    for (int w : out[v]) {
      if (colour[w] == 1) return false;
      if (colour[w] == 0 && !visit(w)) return false;
    }
    colour[v] = 2;
    return true;
  };
  for (int v = 0; v < g.size(); ++v)
    if (colour[v] == 0 && !visit(v)) return false;
  return true;
}

std::vector<Graph> small_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto kn = make_generator(GraphFamily::complete, n).edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kn.size()); ++mask) {
      std::vector<Edge> chosen;
      for (std::size_t e = 0; e < kn.size(); ++e)
        if (mask >> e & 1) chosen.push_back(kn[e]);
      out.emplace_back(n, chosen);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("induced orientation points from smaller to larger label") {
  OrientationSpace e(edge());
  CHECK(e.render(e.induced(parse_labeling("12", 2))) == "0->1");
  OrientationSpace p(path(3));
  auto a = p.induced(parse_labeling("213", 3));
  CHECK(p.render(a) == "1->0 1->2");
  CHECK(p.is_source(a, 1));
}

TEST_CASE("linear extensions") {
  OrientationSpace e(edge());
  auto ext = linear_extensions(e, {e.induced(parse_labeling("12", 2))});
  REQUIRE(ext.size() == 1);
  CHECK(to_string(ext[0]) == "12");

  OrientationSpace p(path(3));
  auto valley = p.induced(parse_labeling("132", 3));
  std::set<std::string> words;
  for (const auto& s : linear_extensions(p, {valley})) words.insert(to_string(s));
  CHECK(words == std::set<std::string>{"132", "231"});
  CHECK(linear_extensions(p, {}).empty());

  // Every labeling extends exactly one acyclic orientation.
  for (const auto& g : small_graphs(4)) {
    OrientationSpace space(g);
    std::size_t total = 0;
    for (auto a : space.enumerate_acyclic()) total += linear_extensions(space, {a}).size();
    CHECK(total == factorial(g.size()));
  }
}

TEST_CASE("sources and sinks") {
  OrientationSpace p(path(3));
  auto [src, snk] = p.sources_and_sinks(Orientation{0});
  CHECK(src == std::vector<Vertex>{0});
  CHECK(snk == std::vector<Vertex>{2});
  auto [src2, snk2] = p.sources_and_sinks(Orientation{0b10});
  CHECK(src2 == std::vector<Vertex>{0, 2});
  CHECK(snk2 == std::vector<Vertex>{1});
  OrientationSpace iso(from_edge_list(3, std::vector<Edge>{{0, 1}}));
  auto [src3, snk3] = iso.sources_and_sinks(Orientation{0});
  CHECK(std::count(src3.begin(), src3.end(), 2) == 1);
  CHECK(std::count(snk3.begin(), snk3.end(), 2) == 1);
}

TEST_CASE("flips") {
  OrientationSpace e(edge());
  CHECK(e.render(e.flip(Orientation{0}, 0)) == "1->0");
  OrientationSpace p(path(3));
  CHECK(p.render(p.flip(Orientation{0}, 2)) == "0->1 2->1");
  CHECK_THROWS_AS(p.flip(Orientation{0}, 1), ToricError);
}

TEST_CASE("double flips") {
  OrientationSpace p(path(3));
  CHECK(p.render(p.double_flip(Orientation{0}, 0, 2)) == "1->0 2->1");
  OrientationSpace e(edge());
  try {
    e.double_flip(Orientation{0}, 0, 1);
    FAIL("expected an error");
  } catch (const DoubleFlipError& err) {
    CHECK(err.cause() == DoubleFlipError::Cause::adjacent);
  }
  try {
    p.double_flip(Orientation{0b10}, 0, 1);
    FAIL("expected an error");
  } catch (const DoubleFlipError& err) {
    CHECK(err.cause() == DoubleFlipError::Cause::adjacent);
  }
  try {
    p.double_flip(Orientation{0}, 2, 0);
    FAIL("expected an error");
  } catch (const DoubleFlipError& err) {
    CHECK(err.cause() == DoubleFlipError::Cause::not_source);
  }
  try {
    p.double_flip(Orientation{0}, 0, 0);
    FAIL("expected an error");
  } catch (const DoubleFlipError& err) {
    CHECK(err.cause() == DoubleFlipError::Cause::same_vertex);
  }
}

TEST_CASE("acyclic orientation counts") {
  CHECK(OrientationSpace(edge()).enumerate_acyclic().size() == 2);
  CHECK(OrientationSpace(triangle()).enumerate_acyclic().size() == 6);
  CHECK(OrientationSpace(path(3)).enumerate_acyclic().size() == 4);
}

TEST_CASE("Kahn acyclicity agrees with DFS, and |Acyc| = |P(-1)|") {
  for (const auto& g : small_graphs(5)) {
    OrientationSpace space(g);
    std::uint64_t dfs_count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
      const bool kahn = space.is_acyclic(Orientation{bits});
      CHECK(kahn == acyclic_dfs(space, Orientation{bits}));
      dfs_count += kahn;
    }
    CHECK(space.enumerate_acyclic().size() == dfs_count);
    CHECK(static_cast<long long>(dfs_count) == std::llabs(eval(chromatic(g), -1)));
  }
}

TEST_CASE("flip classes") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(flip_classes(OrientationSpace(path(n))).classes.size() == 1);
    CHECK(flip_classes(OrientationSpace(make_generator(GraphFamily::star, n))).classes.size() == 1);
  }
  auto e = flip_classes(OrientationSpace(edge()));
  REQUIRE(e.classes.size() == 1);
  CHECK(e.classes[0].size() == 2);
  std::size_t total = 0;
  for (const auto& c : flip_classes(OrientationSpace(triangle())).classes) total += c.size();
  CHECK(total == 6);

  // For a connected graph the number of flip classes is the absolute value
  // of the linear coefficient of its chromatic polynomial.
  for (const auto& g : small_graphs(5)) {
    if (!is_connected(g) || g.size() < 2) continue;
    auto p = chromatic(g);
    CHECK(flip_classes(OrientationSpace(g)).classes.size() == static_cast<std::size_t>(std::llabs(p[1])));
  }
}

TEST_CASE("double-flip classes") {
  auto k2 = double_flip_classes(OrientationSpace(edge()));
  CHECK(k2.classes.size() == 2);
  OrientationSpace p(path(3));
  auto p3 = double_flip_classes(p);
  REQUIRE(p3.classes.size() == 3);
  std::set<std::set<std::string>> rendered;
  for (const auto& cls : p3.classes) {
    std::set<std::string> names;
    for (auto a : cls) names.insert(p.render(a));
    rendered.insert(names);
  }
  CHECK(rendered == std::set<std::set<std::string>>{{"0->1 1->2", "1->0 2->1"}, {"0->1 2->1"}, {"1->0 1->2"}});
  for (int n = 2; n <= 6; ++n) {
    CHECK(double_flip_classes(OrientationSpace(path(n))).classes.size() == std::size_t(n));
    CHECK(double_flip_classes(OrientationSpace(make_generator(GraphFamily::star, n))).classes.size() ==
          std::size_t(n));
  }
}

TEST_CASE("nu") {
  CHECK(nu(make_generator(GraphFamily::cycle, 5)) == 5);
  CHECK(nu(from_edge_list(3, std::vector<Edge>{{0, 1}})) == 1);
  CHECK(nu(from_edge_list(10, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}})) ==
        2);
}

TEST_CASE("flip classes split into nu double-flip classes") {
  for (const auto& g : small_graphs(5)) {
    OrientationSpace space(g);
    auto nesting = nest_classes(flip_classes(space), double_flip_classes(space));
    CHECK(nesting.refines);
    for (auto count : nesting.double_classes_per_flip_class) CHECK(count == std::size_t(nu(g)));
  }
}

TEST_CASE("edge cap") {
  CHECK_THROWS_AS(OrientationSpace(make_generator(GraphFamily::complete, 8)), CapExceeded);
  CHECK_NOTHROW(OrientationSpace(make_generator(GraphFamily::complete, 8), 28));
}
