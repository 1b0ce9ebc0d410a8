#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "rlc/error.hpp"

namespace rlc {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed rows: the neighbours of v are
/// `neighbours_[offsets_[v] .. offsets_[v+1])`, sorted ascending and
/// duplicate-free. Construction is the only way to obtain a Graph, so every
/// instance satisfies the symmetry / no-loop / sorted invariants.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  explicit Graph(std::uint32_t n) : n_(n), offsets_(std::size_t{n} + 1, 0) {}

  /// Builds a graph from an edge list. Self-loops and out-of-range endpoints
  /// are rejected; repeated edges (in either orientation) collapse to one.
  static Graph from_edges(std::uint32_t n, std::span<const Edge> edges) {
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (const Edge& e : edges) {
      detail::require(e.u < n && e.v < n, "edge endpoint out of range");
      detail::require(e.u != e.v, "self-loops are not allowed");
      canon.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    Graph g(n);
    std::vector<std::uint32_t> degree(n, 0);
    for (const Edge& e : canon) {
      ++degree[e.u];
      ++degree[e.v];
    }
    for (std::uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.neighbours_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : canon) {
      g.neighbours_[cursor[e.u]++] = e.v;
      g.neighbours_[cursor[e.v]++] = e.u;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      std::sort(g.neighbours_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                g.neighbours_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    }
    g.edge_count_ = canon.size();
    g.max_degree_ = n == 0 ? 0 : *std::max_element(degree.begin(), degree.end());
    return g;
  }

  static Graph from_edges(std::uint32_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::uint32_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }
  std::uint32_t max_degree() const noexcept { return max_degree_; }

  std::uint32_t degree(Vertex v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const Vertex> neighbours(Vertex v) const noexcept {
    return {neighbours_.data() + offsets_[v], neighbours_.data() + offsets_[v + 1]};
  }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    auto row = neighbours(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : neighbours(u)) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  /// Subgraph induced by `vertices` (any order, no duplicates), relabelled so
  /// that vertices[i] becomes i.
  Graph induced(std::span<const Vertex> vertices) const {
    std::vector<Vertex> local(n_, kAbsent);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      detail::require(vertices[i] < n_, "vertex out of range");
      detail::require(local[vertices[i]] == kAbsent, "duplicate vertex in induced()");
      local[vertices[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (Vertex w : neighbours(vertices[i])) {
        if (local[w] != kAbsent && static_cast<Vertex>(i) < local[w]) {
          es.push_back({static_cast<Vertex>(i), local[w]});
        }
      }
    }
    return from_edges(static_cast<std::uint32_t>(vertices.size()), es);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.neighbours_ == b.neighbours_;
  }

 private:
  static constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();

  std::uint32_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::uint32_t max_degree_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbours_;
};

/// Disjoint union; the vertices of `b` follow those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (const Edge& e : b.edges()) es.push_back({e.u + a.order(), e.v + a.order()});
  return Graph::from_edges(a.order() + b.order(), es);
}

}  // namespace rlc
