#include "toric/orientation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

OrientationSpace::OrientationSpace(Graph g, int edge_cap) : graph_(std::move(g)) {
  if (graph_.edge_count() > static_cast<std::size_t>(std::min(edge_cap, 63)))
    throw CapExceeded("orientation space: " + std::to_string(graph_.edge_count()) +
                      " edges exceeds cap " + std::to_string(std::min(edge_cap, 63)));
  incident_.assign(graph_.size(), 0);
  upper_.assign(graph_.size(), 0);
  const auto& edges = graph_.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::uint64_t bit = std::uint64_t{1} << e;
    incident_[edges[e].first] |= bit;
    incident_[edges[e].second] |= bit;
    upper_[edges[e].second] |= bit;
  }
}

bool OrientationSpace::is_acyclic(Orientation a) const {
  // Repeatedly peel sources; leftover vertices lie on a directed cycle.
  const int n = graph_.size();
  std::vector<int> indegree(n);
  for (int v = 0; v < n; ++v) indegree[v] = std::popcount(in_edges(a, v));
  std::vector<Vertex> stack;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++removed;
    std::uint64_t out = out_edges(a, v);
    while (out) {
      int e = std::countr_zero(out);
      out &= out - 1;
      const auto& [x, y] = graph_.edges()[e];
      Vertex w = x == v ? y : x;
      if (--indegree[w] == 0) stack.push_back(w);
    }
  }
  return removed == n;
}

Orientation OrientationSpace::induced(const Labeling& s) const {
  if (s.size() != graph_.size()) throw ToricError("labeling size does not match graph");
  Orientation a;
  const auto& edges = graph_.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (s.label_of(edges[e].first) > s.label_of(edges[e].second)) a.bits |= std::uint64_t{1} << e;
  return a;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> OrientationSpace::sources_and_sinks(
    Orientation a) const {
  std::vector<Vertex> sources, sinks;
  for (int v = 0; v < graph_.size(); ++v) {
    if (is_source(a, v)) sources.push_back(v);
    if (is_sink(a, v)) sinks.push_back(v);
  }
  return {sources, sinks};
}

Orientation OrientationSpace::flip(Orientation a, Vertex v) const {
  if (v < 0 || v >= graph_.size()) throw ToricError("flip: vertex out of range");
  if (!is_source(a, v) && !is_sink(a, v))
    throw ToricError("flip: vertex " + std::to_string(v) + " is neither a source nor a sink");
  return {a.bits ^ incident_[v]};
}

Orientation OrientationSpace::double_flip(Orientation a, Vertex u, Vertex v) const {
  using Cause = DoubleFlipError::Cause;
  if (u < 0 || v < 0 || u >= graph_.size() || v >= graph_.size())
    throw ToricError("double flip: vertex out of range");
  if (u == v) throw DoubleFlipError(Cause::same_vertex, "double flip: u and v coincide");
  if (graph_.adjacent(u, v))
    throw DoubleFlipError(Cause::adjacent, "double flip: u and v are adjacent");
  if (!is_source(a, u))
    throw DoubleFlipError(Cause::not_source, "double flip: u=" + std::to_string(u) + " is not a source");
  if (!is_sink(a, v))
    throw DoubleFlipError(Cause::not_sink, "double flip: v=" + std::to_string(v) + " is not a sink");
  return {a.bits ^ incident_[u] ^ incident_[v]};
}

std::vector<Orientation> OrientationSpace::enumerate_acyclic() const {
  std::vector<Orientation> out;
  const std::uint64_t total = std::uint64_t{1} << graph_.edge_count();
  for (std::uint64_t bits = 0; bits < total; ++bits)
    if (is_acyclic({bits})) out.push_back({bits});
  return out;
}

std::string OrientationSpace::render(Orientation a) const {
  std::ostringstream out;
  const auto& edges = graph_.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e) out << ' ';
    auto [x, y] = edges[e];
    if (a.bits >> e & 1) std::swap(x, y);
    out << x << "->" << y;
  }
  return out.str();
}

namespace {

template <class Moves>
OrientationPartition close_under(const OrientationSpace& space, MoveKind kind, Moves moves) {
  OrientationPartition p;
  p.kind = kind;
  for (Orientation start : space.enumerate_acyclic()) {
    if (p.class_of.contains(start.bits)) continue;
    const std::size_t id = p.classes.size();
    std::vector<Orientation> members{start};
    p.class_of.emplace(start.bits, id);
    for (std::size_t i = 0; i < members.size(); ++i) {
      moves(members[i], [&](Orientation next) {
        if (p.class_of.emplace(next.bits, id).second) members.push_back(next);
      });
    }
    std::sort(members.begin(), members.end());
    p.classes.push_back(std::move(members));
  }
  return p;
}

}  // namespace

OrientationPartition flip_classes(const OrientationSpace& space) {
  const int n = space.graph().size();
  return close_under(space, MoveKind::flip, [&](Orientation a, auto&& emit) {
    for (Vertex v = 0; v < n; ++v)
      if (space.is_source(a, v) || space.is_sink(a, v)) emit(space.flip(a, v));
  });
}

OrientationPartition double_flip_classes(const OrientationSpace& space) {
  const Graph& g = space.graph();
  const int n = g.size();
  return close_under(space, MoveKind::double_flip, [&](Orientation a, auto&& emit) {
    for (Vertex u = 0; u < n; ++u) {
      if (!space.is_source(a, u)) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || g.adjacent(u, v) || !space.is_sink(a, v)) continue;
        emit(space.double_flip(a, u, v));
      }
    }
  });
}

std::vector<Labeling> linear_extensions(const OrientationSpace& space,
                                        const std::vector<Orientation>& set, int n_cap) {
  const int n = space.graph().size();
  if (n > n_cap)
    throw CapExceeded("linear extensions: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(n_cap));
  std::set<std::uint64_t> wanted;
  for (Orientation a : set) wanted.insert(a.bits);
  std::vector<Labeling> out;
  if (wanted.empty()) return out;
  const std::uint64_t total = factorial(n);
  for (std::uint64_t r = 0; r < total; ++r) {
    Labeling s = unrank(n, r);
    if (wanted.contains(space.induced(s).bits)) out.push_back(std::move(s));
  }
  return out;
}

int nu(const Graph& g) {
  int result = 0;
  for (const auto& block : connected_components(g).blocks)
    result = std::gcd(result, static_cast<int>(block.size()));
  return result;
}

ClassNesting nest_classes(const OrientationPartition& flips, const OrientationPartition& doubles) {
  ClassNesting out;
  out.double_classes_per_flip_class.assign(flips.classes.size(), 0);
  for (const auto& cls : doubles.classes) {
    const std::size_t owner = flips.class_of.at(cls.front().bits);
    for (Orientation a : cls)
      if (flips.class_of.at(a.bits) != owner) out.refines = false;
    ++out.double_classes_per_flip_class[owner];
  }
  return out;
}

}  // namespace toric
