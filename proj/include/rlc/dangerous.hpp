#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/graph.hpp"
#include "rlc/list_assignment.hpp"

namespace rlc {

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::uint32_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex v) noexcept {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(Vertex a, Vertex b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> size_;
};

/// B(G, L): the spanning subgraph of edges whose endpoint lists intersect,
/// together with its connected components.
struct DangerousSubgraph {
  const Graph* host = nullptr;
  Graph graph;                                // spanning subgraph on V(host)
  std::vector<std::vector<Vertex>> components;  // each sorted; ordered by smallest vertex
  std::vector<std::uint32_t> component_of;      // vertex -> index into components
  std::uint32_t max_order = 0;

  std::vector<Edge> edges() const { return graph.edges(); }
};

inline DangerousSubgraph dangerous_subgraph(const Graph& g, const ListAssignment& l) {
  if (l.order() != g.order())
    throw InvalidArgument("list assignment covers " + std::to_string(l.order()) + " vertices, graph has " +
                          std::to_string(g.order()));
  const std::uint32_t n = g.order();
  std::vector<Edge> kept;
  DisjointSets sets(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbours(u)) {
      if (u < v && lists_intersect(l.list(u), l.list(v))) {
        kept.push_back({u, v});
        sets.unite(u, v);
      }
    }
  }

  DangerousSubgraph out;
  out.host = &g;
  out.graph = Graph::from_edges(n, kept);
  out.component_of.assign(n, 0);
  std::vector<std::uint32_t> index_of_root(n, UINT32_MAX);
  // Scanning vertices in order numbers components by their smallest vertex
  // and leaves each member list sorted.
  for (Vertex v = 0; v < n; ++v) {
    const Vertex root = sets.find(v);
    if (index_of_root[root] == UINT32_MAX) {
      index_of_root[root] = static_cast<std::uint32_t>(out.components.size());
      out.components.emplace_back();
    }
    out.component_of[v] = index_of_root[root];
    out.components[index_of_root[root]].push_back(v);
  }
  for (const auto& c : out.components)
    out.max_order = std::max(out.max_order, static_cast<std::uint32_t>(c.size()));
  return out;
}

/// Component orders, largest first; they sum to n.
inline std::vector<std::uint32_t> component_profile(const DangerousSubgraph& d) {
  std::vector<std::uint32_t> sizes;
  sizes.reserve(d.components.size());
  for (const auto& c : d.components) sizes.push_back(static_cast<std::uint32_t>(c.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

}  // namespace rlc
