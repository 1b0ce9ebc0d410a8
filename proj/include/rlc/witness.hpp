#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlc/colouring.hpp"
#include "rlc/dangerous.hpp"
#include "rlc/matching.hpp"
#include "rlc/solver.hpp"

namespace rlc {

/// Structural facts about a minimal non-colourable set U, as computed when
/// the witness was extracted.
struct WitnessChecks {
  bool connected = false;
  std::uint32_t min_colour_multiplicity = 0;  // over colours of L(U)
  std::uint32_t max_matching = 0;             // in F
  std::uint32_t hall_deficiency_j = 0;        // |L(X)| for the Hall violator X
  std::vector<Vertex> hall_set;               // X, global labels
};

/// U with B[U] minimal non-L-colourable.
struct Witness {
  std::vector<Vertex> vertices;  // U, ascending
  std::vector<Edge> edges;       // dangerous edges inside U
  std::vector<Colour> palette;   // L(U), ascending
  std::vector<std::pair<Vertex, Colour>> f_edges;  // incidence graph F
  WitnessChecks checks;

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(vertices.size()); }
  std::uint32_t palette_used() const noexcept { return static_cast<std::uint32_t>(palette.size()); }
};

namespace detail {

inline bool subset_colourable(const Graph& b, const ListAssignment& l, const std::vector<Vertex>& subset,
                              const SolverOptions& options) {
  if (subset.empty()) return true;
  const Graph h = b.induced(subset);
  const ListAssignment lh = restrict_assignment(l, subset);
  return is_colourable(h, lh, options).colourable;
}

inline bool connected_within(const Graph& b, const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return false;
  const Graph h = b.induced(vertices);
  std::vector<char> seen(h.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : h.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == h.order();
}

struct HallAnalysis {
  std::uint32_t max_matching = 0;
  std::vector<Vertex> violator;  // global labels; empty when the matching saturates
  std::uint32_t violator_palette = 0;
};

inline HallAnalysis analyse_hall(const std::vector<Vertex>& vertices, const ListAssignment& l) {
  HallAnalysis out;
  const std::vector<Colour> palette = palette_of(vertices, l);
  BipartiteMatching matching(static_cast<std::uint32_t>(palette.size()), incidence(vertices, l, palette));
  out.max_matching = matching.size();
  if (matching.saturates_left()) return out;
  for (std::uint32_t i : matching.hall_violator()) out.violator.push_back(vertices[i]);
  out.violator_palette = static_cast<std::uint32_t>(palette_of(out.violator, l).size());
  return out;
}

inline std::uint32_t min_multiplicity(const std::vector<Vertex>& vertices, const ListAssignment& l) {
  const std::vector<Colour> all = colour_occurrences(vertices, l);
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    best = std::min(best, static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return all.empty() ? 0 : best;
}

inline Witness make_witness(const Graph& b, const ListAssignment& l, std::vector<Vertex> vertices) {
  Witness w;
  w.vertices = std::move(vertices);
  for (const Edge& e : b.induced(w.vertices).edges()) w.edges.push_back({w.vertices[e.u], w.vertices[e.v]});
  w.palette = palette_of(w.vertices, l);
  for (Vertex v : w.vertices)
    for (Colour c : l.list(v)) w.f_edges.emplace_back(v, c);
  w.checks.connected = connected_within(b, w.vertices);
  w.checks.min_colour_multiplicity = min_multiplicity(w.vertices, l);
  const HallAnalysis hall = analyse_hall(w.vertices, l);
  w.checks.max_matching = hall.max_matching;
  w.checks.hall_set = hall.violator;
  w.checks.hall_deficiency_j = hall.violator_palette;
  return w;
}

// Drops the candidates in [lo, hi) that can go while the kept set stays
// non-colourable. Removing a whole block at once is equivalent to removing
// its vertices one at a time in ascending order: every intermediate set
// contains the final one, and supersets of non-colourable sets are
// non-colourable.
inline void shrink(const Graph& b, const ListAssignment& l, const std::vector<Vertex>& candidates,
                   std::vector<char>& kept, std::size_t lo, std::size_t hi, const SolverOptions& options) {
  if (lo >= hi) return;
  auto current = [&]() {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (kept[i]) s.push_back(candidates[i]);
    return s;
  };
  for (std::size_t i = lo; i < hi; ++i) kept[i] = 0;
  if (!subset_colourable(b, l, current(), options)) return;
  for (std::size_t i = lo; i < hi; ++i) kept[i] = 1;
  if (hi - lo == 1) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  shrink(b, l, candidates, kept, lo, mid, options);
  shrink(b, l, candidates, kept, mid, hi, options);
}

}  // namespace detail

/// A minimal non-colourable vertex set inside the first non-colourable
/// component of B, or nothing when G is L-colourable. Vertices are deleted in
/// ascending index order whenever non-colourability survives the deletion.
/// (Restarting the scan after each deletion cannot change the outcome: a
/// vertex whose deletion once made the set colourable keeps doing so.)
inline std::optional<Witness> minimal_witness(const Graph& g, const ListAssignment& l, const SolverOptions& options = {}) {
  const DangerousSubgraph d = dangerous_subgraph(g, l);
  for (const auto& component : d.components) {
    if (detail::subset_colourable(d.graph, l, component, options)) continue;
    std::vector<char> kept(component.size(), 1);
    detail::shrink(d.graph, l, component, kept, 0, component.size(), options);
    std::vector<Vertex> u;
    for (std::size_t i = 0; i < component.size(); ++i)
      if (kept[i]) u.push_back(component[i]);
    return detail::make_witness(d.graph, l, std::move(u));
  }
  return std::nullopt;
}

struct WitnessViolation {
  std::string check;
  std::string detail;
};

struct WitnessReport {
  std::vector<WitnessViolation> violations;
  std::uint32_t order = 0;            // i
  std::uint32_t palette_used = 0;     // l
  std::uint32_t max_matching = 0;
  std::uint32_t hall_deficiency_j = 0;
  std::uint32_t min_colour_multiplicity = 0;

  bool ok() const noexcept { return violations.empty(); }
  bool violates(const std::string& check) const {
    return std::any_of(violations.begin(), violations.end(), [&](const auto& v) { return v.check == check; });
  }
};

/// Re-derives every structural property of a minimal non-colourable set from
/// the witness vertices, its edges and the lists; nothing stored in
/// `w.checks` is trusted.
///   connected         B[U] is connected
///   colour_multiplicity  each colour of L(U) lies on >= 2 lists
///   hall_deficiency   max matching of F < |U|, violator palette j >= k
///   edge_count        i*k >= k(j+1) + 2(l - j)
///   palette_bound     l <= (ik - k(k-1))/2 and l <= ik/2
///   non_colourable, minimal   the defining property itself
inline WitnessReport validate_witness(const Witness& w, const ListAssignment& l, std::uint32_t k,
                                      const SolverOptions& options = {}) {
  WitnessReport r;
  auto fail = [&](std::string check, std::string why) { r.violations.push_back({std::move(check), std::move(why)}); };

  std::vector<Vertex> u = w.vertices;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (u.empty()) {
    fail("structure", "empty vertex set");
    return r;
  }
  if (u.back() >= l.order()) {
    fail("structure", "vertex outside the assignment");
    return r;
  }
  if (l.k() != k) fail("structure", "lists do not all have size k");

  std::vector<Edge> es;
  for (const Edge& e : w.edges) {
    const bool inside = std::binary_search(u.begin(), u.end(), e.u) && std::binary_search(u.begin(), u.end(), e.v);
    if (!inside) {
      fail("structure", "edge leaves the witness");
      continue;
    }
    if (!lists_intersect(l.list(e.u), l.list(e.v))) fail("structure", "edge is not dangerous");
    es.push_back(e);
  }
  const Graph b = Graph::from_edges(l.order(), es);

  r.order = static_cast<std::uint32_t>(u.size());
  r.palette_used = static_cast<std::uint32_t>(detail::palette_of(u, l).size());
  const std::uint64_t i = r.order;
  const std::uint64_t ell = r.palette_used;

  if (!detail::connected_within(b, u)) fail("connected", "B[U] is disconnected");

  r.min_colour_multiplicity = detail::min_multiplicity(u, l);
  if (r.min_colour_multiplicity < 2)
    fail("colour_multiplicity", "some colour of L(U) appears on a single list");

  const detail::HallAnalysis hall = detail::analyse_hall(u, l);
  r.max_matching = hall.max_matching;
  r.hall_deficiency_j = hall.violator_palette;
  if (hall.max_matching >= u.size()) {
    fail("hall_deficiency", "F has a matching saturating U");
  } else {
    const std::uint64_t j = hall.violator_palette;
    if (j < k) fail("hall_deficiency", "violator palette j < k");
    if (hall.violator.size() < j + 1) fail("hall_deficiency", "violator smaller than j+1");
    // i*k = |E(F)| >= k(j+1) + 2(l - j)
    if (i * k + 2 * j < k * (j + 1) + 2 * ell) fail("edge_count", "edge double count of F fails");
  }

  const std::uint64_t kk = k;
  if (2 * ell + kk * (kk - 1) > i * kk) fail("palette_bound", "l > (ik - k(k-1))/2");
  if (2 * ell > i * kk) fail("palette_bound", "l > ik/2");

  if (detail::subset_colourable(b, l, u, options)) {
    fail("non_colourable", "B[U] is L-colourable");
  } else {
    for (std::size_t x = 0; x < u.size(); ++x) {
      std::vector<Vertex> smaller;
      for (std::size_t y = 0; y < u.size(); ++y)
        if (y != x) smaller.push_back(u[y]);
      if (!detail::subset_colourable(b, l, smaller, options)) {
        fail("minimal", "deleting vertex " + std::to_string(u[x]) + " keeps B[U] non-colourable");
        break;
      }
    }
  }
  return r;
}

}  // namespace rlc
