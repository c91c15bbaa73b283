#include "toric/fs_graph.hpp"

#include <algorithm>
#include <map>

#include "toric/dynamics.hpp"
#include "toric/parallel.hpp"

namespace toric {

namespace {

void check_pair(const Graph& x, const Graph& y) {
  if (x.size() != y.size()) throw ToricError("FS graph needs |V(X)| = |V(Y)|");
}

void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
}

template <class Neighbors>
ComponentPartition components_by_bfs(int n, Neighbors&& neighbors) {
  ComponentPartition p;
  p.n = n;
  const std::uint64_t total = factorial(n);
  constexpr std::uint32_t unseen = ~std::uint32_t{0};
  p.block_of_rank.assign(total, unseen);
  for (std::uint64_t start = 0; start < total; ++start) {
    if (p.block_of_rank[start] != unseen) continue;
    const auto id = static_cast<std::uint32_t>(p.blocks.size());
    std::vector<std::uint64_t> block{start};
    p.block_of_rank[start] = id;
    for (std::size_t i = 0; i < block.size(); ++i) {
      neighbors(unrank(n, block[i]), [&](const Labeling& t) {
        auto r = rank(t);
        if (p.block_of_rank[r] == unseen) {
          p.block_of_rank[r] = id;
          block.push_back(r);
        }
      });
    }
    std::sort(block.begin(), block.end());
    p.blocks.push_back(std::move(block));
  }
  return p;
}

std::string describe_block(int n, const std::vector<std::uint64_t>& block) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ' ';
    out += to_string(unrank(n, block[i]));
  }
  return out + "}";
}

std::vector<std::uint64_t> sorted_ranks(const std::vector<Labeling>& ls) {
  std::vector<std::uint64_t> out;
  out.reserve(ls.size());
  for (const auto& l : ls) out.push_back(rank(l));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool fs_adjacent(const Graph& x, const Graph& y, const Labeling& a, const Labeling& b) {
  check_pair(x, y);
  if (a.size() != x.size() || b.size() != x.size())
    throw ToricError("FS adjacency: bijection size does not match graphs");
  std::vector<Vertex> differ;
  for (Vertex v = 0; v < x.size(); ++v) {
    if (a.label_of(v) != b.label_of(v)) {
      differ.push_back(v);
      if (differ.size() > 2) return false;
    }
  }
  if (differ.size() != 2) return false;
  const Vertex u = differ[0], v = differ[1];
  return x.adjacent(u, v) && y.adjacent(a.label_of(u) - 1, a.label_of(v) - 1) &&
         a.label_of(u) == b.label_of(v) && a.label_of(v) == b.label_of(u);
}

std::vector<Labeling> fs_neighbors(const Graph& x, const Graph& y, const Labeling& s) {
  check_pair(x, y);
  std::vector<Labeling> out;
  for (auto [u, v] : x.edges()) {
    const Label a = s.label_of(u), b = s.label_of(v);
    if (y.adjacent(a - 1, b - 1)) {
      Labeling t = s;
      t.swap_labels(a, b);
      out.push_back(std::move(t));
    }
  }
  return out;
}

ComponentPartition fs_components(const Graph& x, const Graph& y, int n_cap) {
  check_pair(x, y);
  check_cap(x.size(), n_cap, "FS components");
  return components_by_bfs(x.size(), [&](const Labeling& s, auto&& emit) {
    for (const auto& t : fs_neighbors(x, y, s)) emit(t);
  });
}

ComponentPartition toggle_components(const Graph& g, int n_cap) {
  const int n = g.size();
  check_cap(n, n_cap, "FS components");
  return components_by_bfs(n, [&](const Labeling& s, auto&& emit) {
    if (n < 2) return;
    for (int i = 1; i <= n; ++i) {
      Labeling t = s;
      inplace::simple_toggle(g, t, i);
      if (!(t == s)) emit(t);
    }
  });
}

std::vector<std::vector<std::uint64_t>> extension_blocks(const OrientationSpace& space,
                                                         const OrientationPartition& doubles) {
  const int n = space.graph().size();
  std::vector<std::vector<std::uint64_t>> blocks(doubles.classes.size());
  const std::uint64_t total = factorial(n);
  for (std::uint64_t r = 0; r < total; ++r)
    blocks[doubles.class_of.at(space.induced(unrank(n, r)).bits)].push_back(r);
  return blocks;
}

CorrespondenceReport verify_component_correspondence(const Graph& g, const Caps& caps) {
  CorrespondenceReport out;
  const int n = g.size();
  check_cap(n, caps.fs, "component correspondence");
  OrientationSpace space(g, caps.edges);
  auto doubles = double_flip_classes(space);
  auto blocks = extension_blocks(space, doubles);
  auto comps = toggle_components(g, caps.fs);
  out.components = comps.blocks.size();
  out.double_flip_classes = doubles.classes.size();

  // Both sides are sorted rank lists; compare them as sets of blocks.
  auto lhs = comps.blocks;
  auto rhs = blocks;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  if (lhs != rhs) {
    out.pass = false;
    for (const auto& block : comps.blocks) {
      if (!std::binary_search(rhs.begin(), rhs.end(), block)) {
        out.mismatch = "FS component " + describe_block(n, block) +
                       " is not the extension set of a double-flip class";
        break;
      }
    }
    if (out.mismatch.empty())
      out.mismatch = "component count " + std::to_string(lhs.size()) + " vs double-flip classes " +
                     std::to_string(rhs.size());
  }
  return out;
}

CycleReport verify_component_cycle(const Graph& g, const Caps& caps) {
  CycleReport out;
  const int n = g.size();
  check_cap(n, caps.fs, "component cycle");
  out.nu = nu(g);
  OrientationSpace space(g, caps.edges);
  auto flips = flip_classes(space);
  auto doubles = double_flip_classes(space);
  auto blocks = extension_blocks(space, doubles);

  std::map<std::vector<std::uint64_t>, std::size_t> class_by_block;
  for (std::size_t d = 0; d < blocks.size(); ++d) class_by_block.emplace(blocks[d], d);

  // Toggle moves as FS(complement(G), Cycle_n) neighbors.
  auto neighbor_ranks = [&](const Labeling& s) {
    std::vector<std::uint64_t> out_ranks;
    if (n < 2) return out_ranks;
    for (int i = 1; i <= n; ++i) {
      Labeling t = s;
      inplace::simple_toggle(g, t, i);
      if (!(t == s)) out_ranks.push_back(rank(t));
    }
    std::sort(out_ranks.begin(), out_ranks.end());
    out_ranks.erase(std::unique(out_ranks.begin(), out_ranks.end()), out_ranks.end());
    return out_ranks;
  };

  std::vector<std::vector<std::size_t>> members(flips.classes.size());
  for (std::size_t d = 0; d < doubles.classes.size(); ++d)
    members[flips.class_of.at(doubles.classes[d].front().bits)].push_back(d);

  for (std::size_t f = 0; f < members.size() && out.pass; ++f) {
    const auto& inside = members[f];
    std::vector<std::size_t> order{inside.front()};
    for (;;) {
      const std::size_t d = order.back();
      std::vector<std::uint64_t> image;
      for (std::uint64_t r : blocks[d]) {
        Labeling s = unrank(n, r);
        Labeling cs = cyclic_shift(s, 1);
        // Adjacency must map exactly: N(c s) = c N(s).
        std::vector<std::uint64_t> shifted;
        for (std::uint64_t nr : neighbor_ranks(s)) shifted.push_back(rank(cyclic_shift(unrank(n, nr), 1)));
        std::sort(shifted.begin(), shifted.end());
        if (shifted != neighbor_ranks(cs)) {
          out.pass = false;
          out.failure = "c does not preserve FS adjacency at " + to_string(s);
          return out;
        }
        image.push_back(rank(cs));
      }
      std::sort(image.begin(), image.end());
      auto it = class_by_block.find(image);
      if (it == class_by_block.end()) {
        out.pass = false;
        out.failure = "c maps L(D" + std::to_string(d) + ") onto no double-flip class";
        return out;
      }
      const std::size_t next = it->second;
      if (std::find(inside.begin(), inside.end(), next) == inside.end()) {
        out.pass = false;
        out.failure = "c leaves flip class " + std::to_string(f);
        return out;
      }
      if (next == order.front()) break;
      if (std::find(order.begin(), order.end(), next) != order.end()) {
        out.pass = false;
        out.failure = "c cycles without returning to the starting class";
        return out;
      }
      order.push_back(next);
    }
    if (order.size() != inside.size() || static_cast<int>(order.size()) != out.nu) {
      out.pass = false;
      out.failure = "flip class " + std::to_string(f) + " has a c-cycle of length " +
                    std::to_string(order.size()) + " over " + std::to_string(inside.size()) +
                    " double-flip classes, nu=" + std::to_string(out.nu);
    }
    out.orderings.push_back(std::move(order));
  }
  return out;
}

Labeling inverse_bijection(const Labeling& s) {
  std::vector<Label> word(s.size());
  for (Label l = 1; l <= s.size(); ++l) word[l - 1] = s.vertex_of(l) + 1;
  return Labeling(std::move(word));
}

InversionReport inversion_isomorphism_check(const Graph& x, const Graph& y, int n_cap) {
  check_pair(x, y);
  check_cap(x.size(), n_cap, "inversion check");
  InversionReport out;
  const int n = x.size();
  const std::uint64_t total = factorial(n);
  out.vertices = total;
  for (std::uint64_t r = 0; r < total; ++r) {
    Labeling s = unrank(n, r);
    auto forward = sorted_ranks(fs_neighbors(x, y, s));
    out.edges += forward.size();
    std::vector<Labeling> back;
    for (const auto& t : fs_neighbors(y, x, inverse_bijection(s))) back.push_back(inverse_bijection(t));
    if (forward != sorted_ranks(back)) {
      out.pass = false;
      out.failure = "inversion breaks adjacency at " + to_string(s);
      break;
    }
  }
  out.edges /= 2;
  return out;
}

std::vector<Graph> fs_sweep_graphs(int min_n, int max_n, const Caps& caps) {
  std::vector<Graph> out;
  for (int n = std::max(min_n, 1); n <= max_n; ++n) {
    auto connected = enumerate_connected_graphs(n, caps.fs);
    out.insert(out.end(), connected.begin(), connected.end());
    ForestEnumerator forests(n, caps.forests);
    // Trees are already among the connected graphs.
    for (std::uint64_t i = 0; i < forests.size(); ++i)
      if (forests[i].edge_count() + 1 != static_cast<std::size_t>(n)) out.push_back(forests[i]);
  }
  return out;
}

Report verify_fs_theorems(const std::vector<Graph>& graphs, const Caps& caps, int threads) {
  Report report;
  report.suite = "fs";
  report.graphs = graphs.size();
  const char* names[] = {"flip_class_is_union_of_nu_double_flip_classes",
                         "fs_components_match_double_flip_classes",
                         "cyclic_shift_chains_isomorphic_components",
                         "tpro_preserves_fs_components"};
  std::vector<std::vector<Verdict>> per_graph(graphs.size());
  std::vector<std::uint64_t> labelings(graphs.size(), 0);

  parallel_for(graphs.size(), threads, [&](std::uint64_t gi) {
    const Graph& g = graphs[gi];
    const int n = g.size();
    std::vector<Verdict> vs;
    for (const char* name : names) vs.emplace_back(name);
    const std::string where = g.describe();

    OrientationSpace space(g, caps.edges);
    auto nesting = nest_classes(flip_classes(space), double_flip_classes(space));
    const int expected = nu(g);
    bool counts_ok = nesting.refines;
    for (auto c : nesting.double_classes_per_flip_class) counts_ok = counts_ok && c == static_cast<std::size_t>(expected);
    vs[0].check(counts_ok, [&] {
      std::string s = where + ": nu=" + std::to_string(expected) + " counts=";
      for (auto c : nesting.double_classes_per_flip_class) s += std::to_string(c) + " ";
      return s + (nesting.refines ? "" : "(not a refinement)");
    });

    auto corr = verify_component_correspondence(g, caps);
    vs[1].check(corr.pass, [&] { return where + ": " + corr.mismatch; });

    auto cyc = verify_component_cycle(g, caps);
    vs[2].check(cyc.pass, [&] { return where + ": " + cyc.failure; });

    if (n >= 2) {
      auto comps = toggle_components(g, caps.fs);
      const std::uint64_t total = factorial(n);
      labelings[gi] = total;
      for (std::uint64_t r = 0; r < total; ++r) {
        Labeling s = unrank(n, r);
        inplace::toric_promotion(g, s);
        vs[3].check(comps.block_of_rank[rank(s)] == comps.block_of_rank[r],
                    [&] { return where + ": labeling " + to_string(unrank(n, r)); });
      }
    }
    per_graph[gi] = std::move(vs);
  });

  for (const char* name : names) report.verdicts.emplace_back(name);
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    report.labelings += labelings[gi];
    for (std::size_t v = 0; v < report.verdicts.size(); ++v) report.verdicts[v].merge(per_graph[gi][v]);
  }
  return report;
}

}  // namespace toric
