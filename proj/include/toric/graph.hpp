#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toric {

/// Raised for malformed input: bad vertices, bad labels, bad parameters.
class ToricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored as (low, high) pairs in lexicographic order. That order is
/// the canonical edge index used by orientation bit vectors.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from arbitrary pairs; duplicates (in either direction) are
  /// dropped, self-loops and out-of-range endpoints throw.
  Graph(int n, std::span<const Edge> pairs);

  int size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  /// Index of edge {u,v} in the canonical order, or -1.
  int edge_index(Vertex u, Vertex v) const;

  /// Round-trippable description: "edges:N;u-v,u-v".
  std::string describe() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<char> adjacency_;
};

/// Disjoint blocks covering 0..n-1. Blocks are sorted and listed by their
/// smallest vertex.
struct VertexPartition {
  std::vector<std::vector<Vertex>> blocks;

  std::size_t block_of(Vertex v) const;
};

enum class GraphFamily { path, cycle, star, complete };

Graph make_generator(GraphFamily family, int n);
Graph from_edge_list(int n, std::span<const Edge> pairs);
Graph from_prufer(std::span<const int> sequence);
Graph complement(const Graph& g);
VertexPartition connected_components(const Graph& g);
bool is_forest(const Graph& g);
bool is_connected(const Graph& g);

/// The unique simple path from u to v in a forest, endpoints included.
std::vector<Vertex> tree_path(const Graph& g, Vertex u, Vertex v);

/// Labeled trees on n vertices in lexicographic Prüfer order. Random access so
/// that parallel callers can split the index space.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(int n, int cap = 8);
  std::uint64_t size() const { return count_; }
  Graph operator[](std::uint64_t index) const;
  std::vector<int> prufer_at(std::uint64_t index) const;

 private:
  int n_;
  std::uint64_t count_;
};

/// Every acyclic edge subset of K_n, in increasing subset-mask order.
class ForestEnumerator {
 public:
  explicit ForestEnumerator(int n, int cap = 7);
  std::uint64_t size() const { return masks_.size(); }
  Graph operator[](std::uint64_t index) const;

 private:
  int n_;
  std::vector<Edge> all_edges_;
  std::vector<std::uint64_t> masks_;
};

/// Every connected labeled graph on n vertices (edge subsets of K_n).
std::vector<Graph> enumerate_connected_graphs(int n, int cap = 6);

/// Edge-list text format: first data line is n, then "u v" per line; '#' lines
/// are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

}  // namespace toric
