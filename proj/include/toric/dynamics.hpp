#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "toric/graph.hpp"
#include "toric/labeling.hpp"

namespace toric {

// All operators below are pure: they take the labeling by const reference and
// return a new one. Labels are 1-based; toggle index n means the pair (n, 1).

/// Swaps labels i and j when they sit on non-adjacent vertices.
Labeling toggle(const Graph& g, const Labeling& s, Label i, Label j);

/// The i-th simple toggle: (i, i+1) for i < n, (n, 1) for i = n. Indices are
/// taken modulo n into 1..n.
Labeling simple_toggle(const Graph& g, const Labeling& s, int i);

/// tau_{n-1} ... tau_1 (tau_1 applied first).
Labeling promotion(const Graph& g, const Labeling& s);

/// tau_n o Pro. Rejects n = 1.
Labeling toric_promotion(const Graph& g, const Labeling& s);

/// tau_{pi_n} ... tau_{pi_1}, pi in one-line form over 1..n.
Labeling toric_promotion_pi(const Graph& g, std::span<const int> pi, const Labeling& s);

/// One-line permutation 1 2 ... (n-h) n (n-1) ... (n-h+1).
std::vector<int> zeta_permutation(int n, int h);

/// Every label l becomes ((l - 1 + k) mod n) + 1.
Labeling cyclic_shift(const Labeling& s, int k);

/// c o Pro.
Labeling cpro(const Graph& g, const Labeling& s);

/// Slides the label at path.front() to path.back() by successive swaps along
/// the path. A one-vertex path is the identity.
Labeling jdt_slide(const Graph& g, const Labeling& s, std::span<const Vertex> path);

/// The jeu-de-taquin path for c o Pro: start at the vertex labeled 1 and keep
/// stepping to the neighbor carrying the smallest larger label.
std::vector<Vertex> cpro_path(const Graph& g, const Labeling& s);

/// On a forest, the unique path P starting at the vertex labeled 1 with
/// jdt_P(s) = (c o Pro)^power(s).
std::vector<Vertex> forest_power_path(const Graph& g, const Labeling& s, std::uint64_t power);

/// Evaluates tau_n tau_{n-1} ... tau_{n-k+1} c^{-k} (c o Pro)^{ns+k} applied to
/// s, which equals TPro^{(n-1)s+k}(s).
Labeling factored_tpro_power(const Graph& g, const Labeling& s, std::uint64_t s_blocks, int k);

bool is_permutation_of_1_to_n(std::span<const int> pi);

// In-place variants used by the hot loops (census, verification).
namespace inplace {

inline void toggle(const Graph& g, Labeling& s, Label i, Label j) {
  if (!g.adjacent(s.vertex_of(i), s.vertex_of(j))) s.swap_labels(i, j);
}

inline void simple_toggle(const Graph& g, Labeling& s, int i) {
  const int n = s.size();
  i = ((i - 1) % n + n) % n + 1;
  toggle(g, s, i, i == n ? 1 : i + 1);
}

inline void promotion(const Graph& g, Labeling& s) {
  for (int i = 1; i < s.size(); ++i) toggle(g, s, i, i + 1);
}

inline void toric_promotion(const Graph& g, Labeling& s) {
  promotion(g, s);
  toggle(g, s, s.size(), 1);
}

inline void cpro(const Graph& g, Labeling& s) {
  promotion(g, s);
  s.shift(1);
}

}  // namespace inplace

}  // namespace toric
