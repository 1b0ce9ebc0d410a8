#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "rlc/graph.hpp"
#include "rlc/list_assignment.hpp"

namespace rlc {

/// Vertex -> colour over the whole host graph; 0 marks an uncoloured vertex.
struct Colouring {
  std::vector<Colour> colour;

  Colouring() = default;
  explicit Colouring(std::uint32_t n) : colour(n, 0) {}

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(colour.size()); }
  bool assigned(Vertex v) const noexcept { return colour[v] != 0; }
  bool is_total() const noexcept {
    return std::none_of(colour.begin(), colour.end(), [](Colour c) { return c == 0; });
  }
  std::size_t assigned_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(colour.begin(), colour.end(), [](Colour c) { return c != 0; }));
  }

  friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Every assigned colour lies in its vertex's list and no edge of `g` joins
/// two vertices with the same assigned colour. With `require_total`, every
/// vertex must be coloured.
inline bool is_proper_list_colouring(const Graph& g, const ListAssignment& l, const Colouring& c,
                                     bool require_total = true) {
  if (c.order() != g.order() || l.order() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!c.assigned(v)) {
      if (require_total) return false;
      continue;
    }
    if (!l.contains(v, c.colour[v])) return false;
    for (Vertex w : g.neighbours(v))
      if (w > v && c.colour[w] == c.colour[v]) return false;
  }
  return true;
}

/// Lists of `vertices` (in the given order), renumbered 0..s-1.
inline ListAssignment restrict_assignment(const ListAssignment& l, std::span<const Vertex> vertices) {
  std::vector<Colour> flat;
  flat.reserve(vertices.size() * l.k());
  for (Vertex v : vertices) {
    auto row = l.list(v);
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return ListAssignment(l.k(), l.m(), std::move(flat));
}

}  // namespace rlc
