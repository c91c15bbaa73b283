#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/caps.hpp"
#include "toric/graph.hpp"
#include "toric/labeling.hpp"
#include "toric/orientation.hpp"
#include "toric/report.hpp"

namespace toric {

// Bijections V(X) -> V(Y) are stored as Labelings: label l stands for vertex
// l-1 of Y. With Y = Cycle_n this is exactly a labeling of G = complement(X).

/// True iff a and b differ by swapping the images of an X-edge whose images
/// form a Y-edge.
bool fs_adjacent(const Graph& x, const Graph& y, const Labeling& a, const Labeling& b);

/// Neighbors of s in FS(X, Y), one per qualifying X-edge, in X-edge order.
std::vector<Labeling> fs_neighbors(const Graph& x, const Graph& y, const Labeling& s);

/// Connected components of an FS graph as blocks of Lehmer ranks. Blocks are
/// sorted and ordered by their smallest rank.
struct ComponentPartition {
  int n = 0;
  std::vector<std::vector<std::uint64_t>> blocks;
  std::vector<std::uint32_t> block_of_rank;
};

ComponentPartition fs_components(const Graph& x, const Graph& y, int n_cap = 8);

/// Components of FS(complement(G), Cycle_n), explored with the toggles
/// tau_1..tau_n of G as the move set.
ComponentPartition toggle_components(const Graph& g, int n_cap = 8);

/// Labelings whose induced orientations fall in each double-flip class,
/// indexed like `doubles.classes`, as sorted rank lists.
std::vector<std::vector<std::uint64_t>> extension_blocks(const OrientationSpace& space,
                                                         const OrientationPartition& doubles);

struct CorrespondenceReport {
  bool pass = true;
  std::size_t components = 0;
  std::size_t double_flip_classes = 0;
  std::string mismatch;
};

/// FS(complement(G), Cycle_n) components coincide with the linear-extension
/// sets of the double-flip classes.
CorrespondenceReport verify_component_correspondence(const Graph& g, const Caps& caps = {});

struct CycleReport {
  bool pass = true;
  int nu = 0;
  /// One cyclic ordering of double-flip class ids per flip class.
  std::vector<std::vector<std::size_t>> orderings;
  std::string failure;
};

/// Inside every flip class, finds an ordering D_1..D_nu with c mapping
/// L(D_i) onto L(D_{i+1}) as an FS-graph isomorphism.
CycleReport verify_component_cycle(const Graph& g, const Caps& caps = {});

struct InversionReport {
  bool pass = true;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;  // edges of FS(X, Y)
  std::string failure;
};

/// Checks that s -> s^{-1} is an isomorphism FS(X, Y) -> FS(Y, X).
InversionReport inversion_isomorphism_check(const Graph& x, const Graph& y, int n_cap = 8);

Labeling inverse_bijection(const Labeling& s);

/// Every connected graph and every forest with min_n <= n <= max_n.
std::vector<Graph> fs_sweep_graphs(int min_n, int max_n, const Caps& caps = {});

/// Runs the flip/double-flip counting, component correspondence, cyclic-shift
/// isomorphism chain, and TPro closure checks on every graph given.
Report verify_fs_theorems(const std::vector<Graph>& graphs, const Caps& caps, int threads);

}  // namespace toric
