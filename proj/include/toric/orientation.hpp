#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "toric/graph.hpp"
#include "toric/labeling.hpp"

namespace toric {

/// Directions over the canonical edge order: bit e clear means edge e points
/// from its lower-index endpoint to its higher-index endpoint.
struct Orientation {
  std::uint64_t bits = 0;
  friend bool operator==(Orientation, Orientation) = default;
  friend auto operator<=>(Orientation, Orientation) = default;
};

/// Precomputed incidence masks for one graph. Orientation operations go
/// through this so that acyclic orientations stay a plain 64-bit value.
class OrientationSpace {
 public:
  explicit OrientationSpace(Graph g, int edge_cap = 24);

  const Graph& graph() const { return graph_; }

  std::uint64_t in_edges(Orientation a, Vertex v) const {
    return incident_[v] & (a.bits ^ upper_[v]);
  }
  std::uint64_t out_edges(Orientation a, Vertex v) const {
    return incident_[v] & ~(a.bits ^ upper_[v]);
  }
  bool is_source(Orientation a, Vertex v) const { return in_edges(a, v) == 0; }
  bool is_sink(Orientation a, Vertex v) const { return out_edges(a, v) == 0; }

  bool is_acyclic(Orientation a) const;

  Orientation induced(const Labeling& s) const;
  std::pair<std::vector<Vertex>, std::vector<Vertex>> sources_and_sinks(Orientation a) const;

  Orientation flip(Orientation a, Vertex v) const;
  Orientation double_flip(Orientation a, Vertex u, Vertex v) const;

  std::vector<Orientation> enumerate_acyclic() const;

  /// Directed edges "u->v" in canonical edge order.
  std::string render(Orientation a) const;

 private:
  Graph graph_;
  std::vector<std::uint64_t> incident_;
  std::vector<std::uint64_t> upper_;  // edges where v is the higher endpoint
};

class DoubleFlipError : public ToricError {
 public:
  enum class Cause { not_source, not_sink, same_vertex, adjacent };
  DoubleFlipError(Cause cause, const std::string& what) : ToricError(what), cause_(cause) {}
  Cause cause() const { return cause_; }

 private:
  Cause cause_;
};

enum class MoveKind { flip, double_flip };

/// Partition of Acyc(G) into classes closed under a move kind. Classes are
/// sorted internally and ordered by their smallest orientation.
struct OrientationPartition {
  MoveKind kind = MoveKind::flip;
  std::vector<std::vector<Orientation>> classes;
  std::unordered_map<std::uint64_t, std::size_t> class_of;
};

OrientationPartition flip_classes(const OrientationSpace& space);
OrientationPartition double_flip_classes(const OrientationSpace& space);

/// Labelings whose induced orientation lies in `set`, in rank order.
std::vector<Labeling> linear_extensions(const OrientationSpace& space,
                                        const std::vector<Orientation>& set, int n_cap = 10);

/// gcd of the connected-component sizes.
int nu(const Graph& g);

/// For every flip class, the number of double-flip classes it contains
/// (and whether every double-flip class sits inside a single flip class).
struct ClassNesting {
  bool refines = true;
  std::vector<std::size_t> double_classes_per_flip_class;
};
ClassNesting nest_classes(const OrientationPartition& flips, const OrientationPartition& doubles);

}  // namespace toric
