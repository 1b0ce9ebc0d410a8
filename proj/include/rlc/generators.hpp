#pragma once

#include <cstdint>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/graph.hpp"

namespace rlc {

/// r-th power of the n-cycle: i ~ i±1, ..., i±r (mod n).
inline Graph cycle_power(std::uint32_t n, std::uint32_t r) {
  detail::require(n >= 3, "cycle_power: need n >= 3");
  detail::require(r >= 1, "cycle_power: need r >= 1");
  detail::require(std::uint64_t{2} * r < n, "cycle_power: need r < n/2 (wrap-around would merge neighbours)");
  std::vector<Edge> es;
  es.reserve(std::size_t{n} * r);
  for (Vertex i = 0; i < n; ++i) {
    for (std::uint32_t j = 1; j <= r; ++j) es.push_back({i, static_cast<Vertex>((i + j) % n)});
  }
  return Graph::from_edges(n, es);
}

inline Graph complete_graph(std::uint32_t n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph::from_edges(n, es);
}

inline Graph cycle_graph(std::uint32_t n) {
  detail::require(n >= 3, "cycle_graph: need n >= 3");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, es);
}

inline Graph path_graph(std::uint32_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph::from_edges(n, es);
}

/// floor(n/(delta+1)) disjoint copies of K_{delta+1} on consecutive index
/// blocks, then the leftover vertices isolated.
inline Graph disjoint_cliques(std::uint32_t n, std::uint32_t delta) {
  detail::require(n >= 1, "disjoint_cliques: need n >= 1");
  detail::require(delta < n, "disjoint_cliques: need delta < n");
  const std::uint32_t block = delta + 1;
  const std::uint32_t copies = n / block;
  std::vector<Edge> es;
  for (std::uint32_t c = 0; c < copies; ++c) {
    const Vertex base = c * block;
    for (Vertex u = 0; u < block; ++u)
      for (Vertex v = u + 1; v < block; ++v) es.push_back({base + u, base + v});
  }
  return Graph::from_edges(n, es);
}

/// Complete r-partite graph with parts of equal size; part p occupies
/// indices [p*part_size, (p+1)*part_size).
inline Graph complete_multipartite(std::uint32_t part_size, std::uint32_t parts) {
  detail::require(part_size >= 1 && parts >= 1, "complete_multipartite: sizes must be positive");
  const std::uint32_t n = part_size * parts;
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u / part_size != v / part_size) es.push_back({u, v});
  return Graph::from_edges(n, es);
}

/// Complete bipartite graph K_{a,b}; the a-side comes first.
inline Graph complete_bipartite(std::uint32_t a, std::uint32_t b) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) es.push_back({u, a + v});
  return Graph::from_edges(a + b, es);
}

inline Graph petersen_graph() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});          // outer 5-cycle
    es.push_back({i, i + 5});                // spokes
    es.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
  }
  return Graph::from_edges(10, es);
}

struct BlowUp {
  Graph graph;
  std::vector<Vertex> origin;  // vertex -> vertex of the base graph
};

/// d-blow-up: each vertex v becomes the class {v*d, ..., v*d + d - 1}; every
/// base edge becomes a complete bipartite join between the two classes.
inline BlowUp blow_up(const Graph& base, std::uint32_t d) {
  detail::require(d >= 1, "blow_up: multiplicity must be >= 1");
  const std::uint32_t n = base.order() * d;
  std::vector<Edge> es;
  es.reserve(base.size() * d * d);
  for (const Edge& e : base.edges())
    for (std::uint32_t a = 0; a < d; ++a)
      for (std::uint32_t b = 0; b < d; ++b) es.push_back({e.u * d + a, e.v * d + b});
  BlowUp out{Graph::from_edges(n, es), std::vector<Vertex>(n)};
  for (Vertex x = 0; x < n; ++x) out.origin[x] = x / d;
  return out;
}

}  // namespace rlc
