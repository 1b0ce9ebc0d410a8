#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rlc/colouring.hpp"
#include "rlc/dangerous.hpp"
#include "rlc/error.hpp"
#include "rlc/exact.hpp"
#include "rlc/graph.hpp"
#include "rlc/list_assignment.hpp"
#include "rlc/matching.hpp"

namespace rlc {

namespace detail {

// Sorted multiset of every colour on the lists of `vertices`.
inline std::vector<Colour> colour_occurrences(std::span<const Vertex> vertices, const ListAssignment& l) {
  std::vector<Colour> all;
  all.reserve(vertices.size() * l.k());
  for (Vertex v : vertices) {
    auto row = l.list(v);
    all.insert(all.end(), row.begin(), row.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

// One pass: a vertex owning a colour seen on no other list of the set takes
// the smallest such colour. Writes colours into `colour`, returns the rest.
inline std::vector<Vertex> reduce_unique_into(std::span<const Vertex> vertices, const ListAssignment& l,
                                              std::vector<Colour>& colour) {
  std::vector<Vertex> residual;
  if (vertices.size() == 1) {
    colour[vertices[0]] = l.list(vertices[0])[0];
    return residual;
  }
  const std::vector<Colour> all = colour_occurrences(vertices, l);
  for (Vertex v : vertices) {
    Colour chosen = 0;
    for (Colour c : l.list(v)) {
      auto [lo, hi] = std::equal_range(all.begin(), all.end(), c);
      if (hi - lo == 1) {
        chosen = c;
        break;
      }
    }
    if (chosen != 0) colour[v] = chosen;
    else residual.push_back(v);
  }
  return residual;
}

// Vertex/colour incidence graph F of `vertices`; colours are renumbered by
// rank in `palette` (sorted, distinct).
inline std::vector<std::vector<std::uint32_t>> incidence(std::span<const Vertex> vertices, const ListAssignment& l,
                                                         const std::vector<Colour>& palette) {
  std::vector<std::vector<std::uint32_t>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Colour c : l.list(vertices[i]))
      adj[i].push_back(
          static_cast<std::uint32_t>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
  return adj;
}

inline std::vector<Colour> palette_of(std::span<const Vertex> vertices, const ListAssignment& l) {
  std::vector<Colour> palette = colour_occurrences(vertices, l);
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  return palette;
}

inline bool rainbow_into(std::span<const Vertex> vertices, const ListAssignment& l, std::vector<Colour>& colour) {
  if (vertices.empty()) return true;
  const std::vector<Colour> palette = palette_of(vertices, l);
  if (palette.size() < vertices.size()) return false;
  BipartiteMatching matching(static_cast<std::uint32_t>(palette.size()), incidence(vertices, l, palette));
  if (!matching.saturates_left()) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i) colour[vertices[i]] = palette[matching.partner(static_cast<std::uint32_t>(i))];
  return true;
}

}  // namespace detail

struct UniqueColourReduction {
  Colouring partial;             // coloured vertices only
  std::vector<Vertex> residual;  // still uncoloured, ascending
};

/// Colours every vertex of `component` that owns a colour appearing on no
/// other list of the component (smallest such colour). Single pass. Unique
/// colours cannot collide, so the partial colouring is always conflict-free.
inline UniqueColourReduction reduce_unique_colours(std::span<const Vertex> component, const ListAssignment& l) {
  UniqueColourReduction out{Colouring(l.order()), {}};
  out.residual = detail::reduce_unique_into(component, l, out.partial.colour);
  return out;
}

/// Colours `residual` with pairwise distinct colours via a maximum matching of
/// the vertex/colour incidence graph. Sound but incomplete: nothing is
/// returned when no saturating matching exists, even if a colouring does.
inline std::optional<Colouring> rainbow_matching_colouring(std::span<const Vertex> residual, const ListAssignment& l) {
  Colouring out(l.order());
  if (!detail::rainbow_into(residual, l, out.colour)) return std::nullopt;
  return out;
}

/// Which route settled a component (for statistics and tests).
enum class Route { Unique, Matching, Exact };

struct ComponentOutcome {
  bool colourable = false;
  Route route = Route::Unique;
};

struct SolveResult {
  bool colourable = false;
  std::optional<Colouring> colouring;  // total and proper when colourable
  std::uint32_t max_component = 0;     // largest component of B
  std::size_t components = 0;
  std::size_t by_unique = 0;  // components finished by the unique-colour pass
  std::size_t by_matching = 0;
  std::size_t by_exact = 0;
};

namespace detail {

// Unique-colour pass, then rainbow matching, then the exact solver on the
// residual's dangerous edges. Writes colours of `component` into `colour`.
inline ComponentOutcome solve_component(const Graph& b, std::span<const Vertex> component, const ListAssignment& l,
                                        std::vector<Colour>& colour, const SolverOptions& options) {
  const std::vector<Vertex> residual = reduce_unique_into(component, l, colour);
  if (residual.empty()) return {true, Route::Unique};
  if (rainbow_into(residual, l, colour)) return {true, Route::Matching};
  // Uniquely coloured vertices share no colour with the residual, so they
  // place no constraint on it.
  const LocalProblem p = make_local(b, residual, l);
  auto local = solve_local(p, options);
  if (!local) return {false, Route::Exact};
  for (std::uint32_t i = 0; i < p.order(); ++i) colour[p.vertices[i]] = (*local)[i];
  return {true, Route::Exact};
}

}  // namespace detail

/// Decides L-colourability component by component of B. Every component is
/// attempted: a non-colourable component settles the answer even if another
/// one exceeded the exact-solver cap; otherwise a cap overflow is rethrown.
inline SolveResult is_colourable(const DangerousSubgraph& d, const ListAssignment& l, const SolverOptions& options = {}) {
  SolveResult out;
  out.max_component = d.max_order;
  out.components = d.components.size();
  Colouring colouring(l.order());
  bool all_ok = true;
  std::optional<CapExceeded> overflow;
  for (const auto& component : d.components) {
    try {
      const ComponentOutcome r = detail::solve_component(d.graph, component, l, colouring.colour, options);
      switch (r.route) {
        case Route::Unique: ++out.by_unique; break;
        case Route::Matching: ++out.by_matching; break;
        case Route::Exact: ++out.by_exact; break;
      }
      if (!r.colourable) {
        all_ok = false;
        break;
      }
    } catch (const CapExceeded& e) {
      if (!overflow) overflow = e;
    }
  }
  if (!all_ok) return out;
  if (overflow) throw *overflow;
  out.colourable = true;
  out.colouring = std::move(colouring);
  return out;
}

inline SolveResult is_colourable(const Graph& g, const ListAssignment& l, const SolverOptions& options = {}) {
  return is_colourable(dangerous_subgraph(g, l), l, options);
}

}  // namespace rlc
