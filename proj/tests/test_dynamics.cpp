#include <doctest.h>

#include <random>

#include "toric/dynamics.hpp"

using namespace toric;

namespace {

Graph path(int n) { return make_generator(GraphFamily::path, n); }
Graph star(int n) { return make_generator(GraphFamily::star, n); }
Labeling L(const char* w) { return parse_labeling(w, static_cast<int>(std::char_traits<char>::length(w))); }

// Word-level oracle written straight from the toggle rule: find where labels
// i and j sit and swap them unless those vertices are adjacent.
std::vector<int> naive_toggle(const Graph& g, std::vector<int> w, int i, int j) {
  int vi = -1, vj = -1;
  for (int v = 0; v < static_cast<int>(w.size()); ++v) {
    if (w[v] == i) vi = v;
    if (w[v] == j) vj = v;
  }
  bool adj = false;
  for (auto [a, b] : g.edges()) adj |= (a == vi && b == vj) || (a == vj && b == vi);
  if (!adj) std::swap(w[vi], w[vj]);
  return w;
}

std::vector<int> naive_tpro(const Graph& g, std::vector<int> w) {
  const int n = static_cast<int>(w.size());
  for (int i = 1; i < n; ++i) w = naive_toggle(g, w, i, i + 1);
  return naive_toggle(g, w, n, 1);
}

std::vector<int> word(const Labeling& s) { return {s.word().begin(), s.word().end()}; }

Labeling random_labeling(int n, std::mt19937_64& rng) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return Labeling(w);
}

Graph random_graph(int n, std::mt19937_64& rng) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 2) es.emplace_back(u, v);
  return Graph(n, es);
}

}  // namespace

TEST_CASE("toggle examples") {
  CHECK(toggle(path(5), L("45123"), 3, 4) == L("35124"));
  CHECK(toggle(path(5), L("45123"), 1, 2) == L("45123"));
  CHECK_THROWS_AS(toggle(path(5), L("45123"), 2, 2), ToricError);
  CHECK_THROWS_AS(toggle(path(5), L("45123"), 0, 2), ToricError);
  CHECK_THROWS_AS(toggle(path(4), L("45123"), 1, 2), ToricError);
}

TEST_CASE("promotion examples") {
  CHECK(promotion(path(5), L("45123")) == L("34125"));
  CHECK(promotion(Graph(1, {}), L("1")) == L("1"));
  auto k5 = make_generator(GraphFamily::complete, 5);
  for (std::uint64_t r = 0; r < 120; r += 7) CHECK(promotion(k5, unrank(5, r)) == unrank(5, r));
}

TEST_CASE("toric promotion examples") {
  CHECK(toric_promotion(path(5), L("45123")) == L("34521"));
  CHECK(toric_promotion(path(3), L("123")) == L("321"));
  CHECK(toric_promotion(path(3), L("321")) == L("123"));
  CHECK_THROWS_AS(toric_promotion(Graph(1, {}), L("1")), ToricError);
}

TEST_CASE("toggle, promotion, and toric promotion agree with the word oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    auto g = random_graph(n, rng);
    auto s = random_labeling(n, rng);
    const int i = 1 + static_cast<int>(rng() % n);
    int j = 1 + static_cast<int>(rng() % n);
    if (j == i) j = i % n + 1;
    CHECK(word(toggle(g, s, i, j)) == naive_toggle(g, word(s), i, j));
    CHECK(word(toric_promotion(g, s)) == naive_tpro(g, word(s)));
    CHECK(toggle(g, toggle(g, s, i, j), i, j) == s);
  }
}

TEST_CASE("simple_toggle indices wrap mod n") {
  auto g = path(5);
  auto s = L("45123");
  CHECK(simple_toggle(g, s, 5) == toggle(g, s, 5, 1));
  CHECK(simple_toggle(g, s, 6) == simple_toggle(g, s, 1));
  CHECK(simple_toggle(g, s, 0) == simple_toggle(g, s, 5));
}

TEST_CASE("TPro_pi") {
  auto g = path(5);
  std::vector<int> id{1, 2, 3, 4, 5};
  for (std::uint64_t r = 0; r < 120; ++r)
    CHECK(toric_promotion_pi(g, id, unrank(5, r)) == toric_promotion(g, unrank(5, r)));
  CHECK(toric_promotion_pi(g, zeta_permutation(5, 1), L("45123")) == L("34521"));

  auto p4 = path(4);
  auto z = zeta_permutation(4, 2);
  CHECK(z == std::vector<int>{1, 2, 4, 3});
  for (std::uint64_t r = 0; r < 24; ++r) {
    auto s = unrank(4, r);
    auto expected = simple_toggle(p4, simple_toggle(p4, simple_toggle(p4, simple_toggle(p4, s, 1), 2), 4), 3);
    CHECK(toric_promotion_pi(p4, z, s) == expected);
  }
  CHECK_THROWS_AS(toric_promotion_pi(g, std::vector<int>{1, 2, 3, 3, 5}, L("45123")), ToricError);
}

TEST_CASE("zeta permutations") {
  CHECK(zeta_permutation(5, 1) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(zeta_permutation(6, 2) == std::vector<int>{1, 2, 3, 4, 6, 5});
  CHECK(zeta_permutation(7, 3) == std::vector<int>{1, 2, 3, 4, 7, 6, 5});
  CHECK_THROWS_AS(zeta_permutation(6, 4), ToricError);
  CHECK_THROWS_AS(zeta_permutation(6, 0), ToricError);
  CHECK(is_permutation_of_1_to_n(std::vector<int>{3, 1, 2}));
  CHECK_FALSE(is_permutation_of_1_to_n(std::vector<int>{3, 1, 1}));
}

TEST_CASE("cyclic shift") {
  CHECK(cyclic_shift(L("45123"), 1) == L("51234"));
  CHECK(cyclic_shift(L("213"), -1) == L("132"));
  for (std::uint64_t r = 0; r < 24; ++r) CHECK(cyclic_shift(unrank(4, r), 4) == unrank(4, r));
}

TEST_CASE("jeu de taquin slides") {
  auto g = path(3);
  CHECK(jdt_slide(g, L("123"), std::vector<Vertex>{0, 1, 2}) == L("231"));
  CHECK(jdt_slide(g, L("213"), std::vector<Vertex>{1}) == L("213"));
  CHECK(jdt_slide(path(2), L("12"), std::vector<Vertex>{0, 1}) == L("21"));
  CHECK_THROWS_AS(jdt_slide(g, L("123"), std::vector<Vertex>{0, 2}), ToricError);
  CHECK_THROWS_AS(jdt_slide(g, L("123"), std::vector<Vertex>{}), ToricError);
  CHECK_THROWS_AS(jdt_slide(g, L("123"), std::vector<Vertex>{0, 1, 0}), ToricError);
}

TEST_CASE("cpro_path") {
  CHECK(cpro_path(path(3), L("123")) == std::vector<Vertex>{0, 1, 2});
  auto k5 = make_generator(GraphFamily::complete, 5);
  auto s = L("31524");
  auto p = cpro_path(k5, s);
  REQUIRE(p.size() == 5);
  for (int j = 0; j < 5; ++j) CHECK(s.label_of(p[j]) == j + 1);
  auto isolated = from_edge_list(3, std::vector<Edge>{{1, 2}});
  CHECK(cpro_path(isolated, L("123")) == std::vector<Vertex>{0});
}

TEST_CASE("cPro is a jeu-de-taquin slide along cpro_path") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    auto g = random_graph(n, rng);
    auto s = random_labeling(n, rng);
    CHECK(jdt_slide(g, s, cpro_path(g, s)) == cpro(g, s));
    CHECK(cpro(g, s) == cyclic_shift(promotion(g, s), 1));
  }
}

TEST_CASE("forest_power_path") {
  auto g = path(3);
  auto s = L("123");
  CHECK(forest_power_path(g, s, 0) == std::vector<Vertex>{s.vertex_of(1)});
  CHECK(forest_power_path(g, s, 1) == cpro_path(g, s));
  CHECK(jdt_slide(g, s, forest_power_path(g, s, 2)) == cpro(g, cpro(g, s)));
  CHECK_THROWS_AS(forest_power_path(make_generator(GraphFamily::cycle, 3), s, 1), ToricError);

  auto forest = from_edge_list(6, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {4, 5}});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = random_labeling(6, rng);
    Labeling power = t;
    for (std::uint64_t l = 0; l <= 12; ++l) {
      CHECK(jdt_slide(forest, t, forest_power_path(forest, t, l)) == power);
      power = cpro(forest, power);
    }
  }
}

TEST_CASE("factored TPro powers") {
  auto g = path(5);
  auto s = L("45123");
  CHECK(factored_tpro_power(g, s, 0, 0) == s);
  CHECK(factored_tpro_power(g, s, 0, 2) == toric_promotion(g, toric_promotion(g, s)));
  Labeling c = s, t = s;
  for (int r = 0; r < 5; ++r) c = cpro(g, c);
  for (int r = 0; r < 4; ++r) t = toric_promotion(g, t);
  CHECK(factored_tpro_power(g, s, 1, 0) == c);
  CHECK(c == t);
  CHECK_THROWS_AS(factored_tpro_power(g, s, 0, 4), ToricError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    auto h = random_graph(n, rng);
    auto x = random_labeling(n, rng);
    std::vector<Labeling> powers{x};
    for (int p = 1; p <= 3 * (n - 1) + n - 2; ++p) powers.push_back(toric_promotion(h, powers.back()));
    for (int blocks = 0; blocks <= 3; ++blocks)
      for (int k = 0; k <= n - 2; ++k)
        CHECK(factored_tpro_power(h, x, blocks, k) == powers[(n - 1) * blocks + k]);
  }
}

TEST_CASE("shift conjugates simple toggles: c tau_i = tau_{i+1} c") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    auto g = random_graph(n, rng);
    auto s = random_labeling(n, rng);
    for (int i = 1; i <= n; ++i)
      CHECK(cyclic_shift(simple_toggle(g, s, i), 1) == simple_toggle(g, cyclic_shift(s, 1), i + 1));
  }
}

TEST_CASE("in-place and pure forms agree") {
  auto g = star(6);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = random_labeling(6, rng);
    Labeling a = s;
    inplace::toric_promotion(g, a);
    CHECK(a == toric_promotion(g, s));
    Labeling b = s;
    inplace::cpro(g, b);
    CHECK(b == cpro(g, s));
  }
}
