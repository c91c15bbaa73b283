#include "toric/dynamics.hpp"

#include <algorithm>

namespace toric {

namespace {

void check_label(const Labeling& s, Label l) {
  if (l < 1 || l > s.size())
    throw ToricError("label " + std::to_string(l) + " out of range 1.." + std::to_string(s.size()));
}

void check_sizes(const Graph& g, const Labeling& s) {
  if (g.size() != s.size())
    throw ToricError("labeling has " + std::to_string(s.size()) + " labels but graph has " +
                     std::to_string(g.size()) + " vertices");
}

}  // namespace

bool is_permutation_of_1_to_n(std::span<const int> pi) {
  std::vector<char> seen(pi.size() + 1, 0);
  for (int x : pi) {
    if (x < 1 || x > static_cast<int>(pi.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Labeling toggle(const Graph& g, const Labeling& s, Label i, Label j) {
  check_sizes(g, s);
  check_label(s, i);
  check_label(s, j);
  if (i == j) throw ToricError("toggle needs distinct labels");
  Labeling out = s;
  inplace::toggle(g, out, i, j);
  return out;
}

Labeling simple_toggle(const Graph& g, const Labeling& s, int i) {
  check_sizes(g, s);
  if (s.size() < 2) throw ToricError("simple toggle needs n >= 2");
  Labeling out = s;
  inplace::simple_toggle(g, out, i);
  return out;
}

Labeling promotion(const Graph& g, const Labeling& s) {
  check_sizes(g, s);
  Labeling out = s;
  inplace::promotion(g, out);
  return out;
}

Labeling toric_promotion(const Graph& g, const Labeling& s) {
  check_sizes(g, s);
  if (s.size() < 2) throw ToricError("toric promotion needs n >= 2");
  Labeling out = s;
  inplace::toric_promotion(g, out);
  return out;
}

Labeling toric_promotion_pi(const Graph& g, std::span<const int> pi, const Labeling& s) {
  check_sizes(g, s);
  if (s.size() < 2) throw ToricError("toric promotion needs n >= 2");
  if (static_cast<int>(pi.size()) != s.size() || !is_permutation_of_1_to_n(pi))
    throw ToricError("pi is not a permutation of 1..n");
  Labeling out = s;
  for (int i : pi) inplace::simple_toggle(g, out, i);
  return out;
}

std::vector<int> zeta_permutation(int n, int h) {
  if (h < 1 || h > n / 2)
    throw ToricError("zeta: h=" + std::to_string(h) + " outside 1.." + std::to_string(n / 2));
  std::vector<int> pi;
  for (int i = 1; i <= n - h; ++i) pi.push_back(i);
  for (int i = n; i > n - h; --i) pi.push_back(i);
  return pi;
}

Labeling cyclic_shift(const Labeling& s, int k) {
  Labeling out = s;
  out.shift(k);
  return out;
}

Labeling cpro(const Graph& g, const Labeling& s) {
  check_sizes(g, s);
  Labeling out = s;
  inplace::cpro(g, out);
  return out;
}

Labeling jdt_slide(const Graph& g, const Labeling& s, std::span<const Vertex> path) {
  check_sizes(g, s);
  if (path.empty()) throw ToricError("jdt: empty path");
  std::vector<char> seen(g.size(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    Vertex v = path[i];
    if (v < 0 || v >= g.size()) throw ToricError("jdt: vertex out of range");
    if (seen[v]) throw ToricError("jdt: path repeats vertex " + std::to_string(v));
    seen[v] = 1;
    if (i && !g.adjacent(path[i - 1], v))
      throw ToricError("jdt: vertices " + std::to_string(path[i - 1]) + " and " +
                       std::to_string(v) + " are not adjacent");
  }
  Labeling out = s;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    out.swap_labels(out.label_of(path[i]), out.label_of(path[i + 1]));
  return out;
}

std::vector<Vertex> cpro_path(const Graph& g, const Labeling& s) {
  check_sizes(g, s);
  std::vector<Vertex> path{s.vertex_of(1)};
  for (;;) {
    const Vertex here = path.back();
    const Label current = s.label_of(here);
    Label next = 0;
    for (Vertex w : g.neighbors(here)) {
      Label l = s.label_of(w);
      if (l > current && (next == 0 || l < next)) next = l;
    }
    if (next == 0) break;
    path.push_back(s.vertex_of(next));
  }
  return path;
}

std::vector<Vertex> forest_power_path(const Graph& g, const Labeling& s, std::uint64_t power) {
  check_sizes(g, s);
  if (!is_forest(g)) throw ToricError("forest_power_path: graph is not a forest");
  const Vertex start = s.vertex_of(1);
  Vertex end = start;
  Labeling current = s;
  for (std::uint64_t step = 0; step < power; ++step) {
    auto path = cpro_path(g, current);
    current = jdt_slide(g, current, path);
    end = path.back();
  }
  return tree_path(g, start, end);
}

Labeling factored_tpro_power(const Graph& g, const Labeling& s, std::uint64_t s_blocks, int k) {
  check_sizes(g, s);
  const int n = s.size();
  if (n < 2) throw ToricError("factored_tpro_power needs n >= 2");
  if (k < 0 || k > n - 2) throw ToricError("factored_tpro_power: k outside 0..n-2");
  Labeling out = s;
  const std::uint64_t reps = static_cast<std::uint64_t>(n) * s_blocks + static_cast<std::uint64_t>(k);
  for (std::uint64_t r = 0; r < reps; ++r) inplace::cpro(g, out);
  out.shift(-k);
  for (int i = n - k + 1; i <= n; ++i) inplace::simple_toggle(g, out, i);
  return out;
}

}  // namespace toric
