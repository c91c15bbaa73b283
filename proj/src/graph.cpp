#include "toric/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace toric {

Graph::Graph(int n, std::span<const Edge> pairs) : n_(n) {
  if (n < 0) throw ToricError("negative vertex count");
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ToricError("vertex out of range in edge " + std::to_string(u) + "-" +
                       std::to_string(v));
    }
    if (u == v) throw ToricError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  neighbors_.assign(n, {});
  adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges_) {
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    adjacency_[static_cast<std::size_t>(u) * n + v] = 1;
    adjacency_[static_cast<std::size_t>(v) * n + u] = 1;
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_index(Vertex u, Vertex v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::string Graph::describe() const {
  std::ostringstream out;
  out << "edges:" << n_ << ';';
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out << ',';
    out << edges_[i].first << '-' << edges_[i].second;
  }
  return out.str();
}

std::size_t VertexPartition::block_of(Vertex v) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), v)) return b;
  }
  throw ToricError("vertex not covered by partition");
}

Graph make_generator(GraphFamily family, int n) {
  if (n <= 0) throw ToricError("generator needs n >= 1");
  std::vector<Edge> e;
  switch (family) {
    case GraphFamily::path:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case GraphFamily::cycle:
      if (n == 1) throw ToricError("cycle on 1 vertex would be a self-loop");
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 1, 0);
      break;
    case GraphFamily::star:
      for (int i = 1; i < n; ++i) e.emplace_back(0, i);
      break;
    case GraphFamily::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
      break;
  }
  return Graph(n, e);
}

Graph from_edge_list(int n, std::span<const Edge> pairs) {
  if (n <= 0) throw ToricError("edge list needs n >= 1");
  return Graph(n, pairs);
}

Graph from_prufer(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw ToricError("Prüfer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> e;
  e.reserve(n - 1);
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  for (int x : sequence) {
    int leaf = leaves.top();
    leaves.pop();
    e.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  e.emplace_back(a, b);
  return Graph(n, e);
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(g.size(), e);
}

VertexPartition connected_components(const Graph& g) {
  VertexPartition p;
  std::vector<char> seen(g.size(), 0);
  for (int s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> block{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (Vertex w : g.neighbors(block[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          block.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    p.blocks.push_back(std::move(block));
  }
  return p;
}

bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).blocks.size() ==
         static_cast<std::size_t>(g.size());
}

bool is_connected(const Graph& g) {
  return connected_components(g).blocks.size() <= 1;
}

std::vector<Vertex> tree_path(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.size() || v >= g.size())
    throw ToricError("tree_path: vertex out of range");
  if (!is_forest(g)) throw ToricError("tree_path: graph is not a forest");
  std::vector<int> parent(g.size(), -1);
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> queue{u};
  seen[u] = 1;
  for (std::size_t i = 0; i < queue.size() && !seen[v]; ++i) {
    for (Vertex w : g.neighbors(queue[i])) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
  if (!seen[v]) throw ToricError("tree_path: vertices in different components");
  std::vector<Vertex> path;
  for (Vertex x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

TreeEnumerator::TreeEnumerator(int n, int cap) : n_(n), count_(1) {
  if (n < 2) throw ToricError("tree enumeration needs n >= 2");
  if (n > cap) throw CapExceeded("tree enumeration: n=" + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
  for (int i = 0; i < n - 2; ++i) count_ *= static_cast<std::uint64_t>(n);
}

std::vector<int> TreeEnumerator::prufer_at(std::uint64_t index) const {
  std::vector<int> seq(n_ - 2);
  for (int i = n_ - 3; i >= 0; --i) {
    seq[i] = static_cast<int>(index % n_);
    index /= n_;
  }
  return seq;
}

Graph TreeEnumerator::operator[](std::uint64_t index) const {
  auto seq = prufer_at(index);
  return from_prufer(seq);
}

namespace {

// Union-find acyclicity test over a subset mask of candidate edges.
bool acyclic_subset(int n, const std::vector<Edge>& edges, std::uint64_t mask) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    int a = find(edges[i].first), b = find(edges[i].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return e;
}

Graph subset_graph(int n, const std::vector<Edge>& all, std::uint64_t mask) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (mask >> i & 1) e.push_back(all[i]);
  return Graph(n, e);
}

}  // namespace

ForestEnumerator::ForestEnumerator(int n, int cap) : n_(n) {
  if (n < 1) throw ToricError("forest enumeration needs n >= 1");
  if (n > cap) throw CapExceeded("forest enumeration: n=" + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
  all_edges_ = complete_edges(n);
  const std::uint64_t total = std::uint64_t{1} << all_edges_.size();
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (acyclic_subset(n, all_edges_, mask)) masks_.push_back(mask);
}

Graph ForestEnumerator::operator[](std::uint64_t index) const {
  return subset_graph(n_, all_edges_, masks_.at(index));
}

std::vector<Graph> enumerate_connected_graphs(int n, int cap) {
  if (n < 1) throw ToricError("graph enumeration needs n >= 1");
  if (n > cap) throw CapExceeded("graph enumeration: n=" + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
  auto all = complete_edges(n);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = subset_graph(n, all, mask);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw ToricError("edge list line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n <= 0) fail("expected a positive vertex count");
      std::string rest;
      if (fields >> rest) fail("trailing text after vertex count");
      continue;
    }
    long long u, v;
    if (!(fields >> u >> v)) fail("expected \"u v\"");
    std::string rest;
    if (fields >> rest) fail("trailing text after edge");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
    if (u == v) fail("self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ToricError("edge list: missing vertex count");
  return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ToricError("cannot open edge list file: " + path);
  return read_edge_list(in);
}

}  // namespace toric
