#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/forbidden.hpp"
#include "rlc/graph.hpp"
#include "rlc/graph_io.hpp"
#include "rlc/list_assignment.hpp"

namespace rlc {

struct ChoosabilityOptions {
  std::uint32_t cap = 8;             // largest k-core enumerated exhaustively
  std::uint32_t chromatic_cap = 16;  // largest graph handed to chromatic_number
};

namespace detail {

using Mask = std::uint32_t;  // vertex sets of graphs with at most 32 vertices

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  require(g.order() <= 32, "bitmask routines need at most 32 vertices");
  std::vector<Mask> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbours(v)) adj[v] |= Mask{1} << w;
  return adj;
}

inline std::uint32_t max_clique(const std::vector<Mask>& adj, Mask candidates, std::uint32_t size, std::uint32_t best) {
  if (candidates == 0) return std::max(best, size);
  while (candidates != 0) {
    if (size + static_cast<std::uint32_t>(std::popcount(candidates)) <= best) return best;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    best = max_clique(adj, candidates & adj[static_cast<std::size_t>(v)], size + 1, best);
  }
  return best;
}

// DSATUR greedy: repeatedly colour the vertex with the most distinct
// neighbour colours (ties: higher degree, then smaller index).
inline std::uint32_t dsatur_colours(const std::vector<Mask>& adj) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  std::vector<int> colour(n, -1);
  std::vector<std::uint64_t> seen(n, 0);
  std::uint32_t used = 0;
  for (std::uint32_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      if (best < 0) {
        best = static_cast<int>(v);
        continue;
      }
      const auto b = static_cast<std::uint32_t>(best);
      const int sv = std::popcount(seen[v]), sb = std::popcount(seen[b]);
      if (sv > sb || (sv == sb && std::popcount(adj[v]) > std::popcount(adj[b]))) best = static_cast<int>(v);
    }
    const auto v = static_cast<std::uint32_t>(best);
    int c = 0;
    while ((seen[v] >> c) & 1) ++c;
    colour[v] = c;
    used = std::max(used, static_cast<std::uint32_t>(c + 1));
    for (std::uint32_t w = 0; w < n; ++w)
      if ((adj[v] >> w) & 1) seen[w] |= std::uint64_t{1} << c;
  }
  return used;
}

// k-colourability by backtracking on the most saturated vertex; a new
// colour may only be opened in increasing order (kills colour symmetry).
inline bool k_colourable(const std::vector<Mask>& adj, std::vector<int>& colour, std::uint32_t k,
                         std::uint32_t coloured, std::uint32_t opened) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  if (coloured == n) return true;
  int best = -1;
  int best_sat = -1;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (colour[v] >= 0) continue;
    std::uint64_t seen = 0;
    for (std::uint32_t w = 0; w < n; ++w)
      if (((adj[v] >> w) & 1) && colour[w] >= 0) seen |= std::uint64_t{1} << colour[w];
    const int sat = std::popcount(seen);
    if (sat > best_sat) {
      best_sat = sat;
      best = static_cast<int>(v);
    }
  }
  const auto v = static_cast<std::uint32_t>(best);
  const std::uint32_t limit = std::min(k, opened + 1);
  for (std::uint32_t c = 0; c < limit; ++c) {
    bool clash = false;
    for (std::uint32_t w = 0; w < n && !clash; ++w)
      clash = ((adj[v] >> w) & 1) && colour[w] == static_cast<int>(c);
    if (clash) continue;
    colour[v] = static_cast<int>(c);
    if (k_colourable(adj, colour, k, coloured + 1, std::max(opened, c + 1))) return true;
    colour[v] = -1;
  }
  return false;
}

// List colouring of a small graph given as masks; lists are rows of k
// colours. Colours vertices 0..count-1 in index order.
class SmallListColourer {
 public:
  SmallListColourer(std::vector<Mask> adj, std::uint32_t k)
      : adj_(std::move(adj)), k_(k), colour_(adj_.size(), 0) {}

  bool colourable(const std::vector<Colour>& lists, std::uint32_t count) {
    lists_ = &lists;
    return assign(0, count);
  }

 private:
  bool assign(std::uint32_t v, std::uint32_t count) {
    if (v == count) return true;
    for (std::uint32_t i = 0; i < k_; ++i) {
      const Colour c = (*lists_)[std::size_t{v} * k_ + i];
      bool clash = false;
      Mask earlier = adj_[v] & ((Mask{1} << v) - 1);
      while (earlier != 0 && !clash) {
        const int w = std::countr_zero(earlier);
        earlier &= earlier - 1;
        clash = colour_[static_cast<std::size_t>(w)] == c;
      }
      if (clash) continue;
      colour_[v] = c;
      if (assign(v + 1, count)) return true;
    }
    colour_[v] = 0;
    return false;
  }

  std::vector<Mask> adj_;
  std::uint32_t k_;
  std::vector<Colour> colour_;
  const std::vector<Colour>* lists_ = nullptr;
};

// Searches the k-list assignments of a connected graph for a bad one.
//
// An assignment is described by its colour classes V_c = {v : c in L(v)};
// renaming colours only permutes the classes, so each assignment up to colour
// names is a multiset of classes in which every vertex lies in exactly k of
// them. Classes are taken in a fixed order (grouped by smallest vertex) and
// chosen in non-decreasing order, which visits every multiset once. Once the
// group of vertex v is done, L(v) is final.
//
// Only tight assignments are generated: every colour of L(u) also lies on the
// list of a neighbour of u, i.e. each class induces a subgraph without
// isolated vertices. This loses nothing. If L is bad, take a vertex-minimal H
// with L|H bad; a colour of L(u), u in H, missing from every neighbour list in
// H would let u be coloured last, so L|H is tight. Giving the remaining
// vertices, in BFS order from H, the list of an already listed neighbour
// keeps the assignment bad and makes it tight.
class CanonicalEnumerator {
 public:
  CanonicalEnumerator(const std::vector<Mask>& adj, std::uint32_t k)
      : adj_(adj), k_(k), s_(static_cast<std::uint32_t>(adj.size())), count_(s_, 0), colourer_(adj, k) {
    require(s_ <= 24, "class enumeration needs at most 24 vertices");
    groups_.resize(s_);
    for (Mask m = 1; m < (Mask{1} << s_); ++m) {
      if (std::popcount(m) < 2) continue;
      bool tight = true;
      for (Mask rest = m; rest != 0 && tight; rest &= rest - 1)
        tight = (adj_[static_cast<std::size_t>(std::countr_zero(rest))] & m) != 0;
      if (tight) groups_[static_cast<std::size_t>(std::countr_zero(m))].push_back(m);
    }
  }

  /// True when a non-colourable assignment exists; it is left in lists().
  bool find_bad() { return descend(0, 0); }

  /// Lists of the bad assignment found (row-major, k per vertex), colours
  /// renamed in order of first appearance.
  const std::vector<Colour>& lists() const noexcept { return lists_; }
  std::uint64_t leaves() const noexcept { return leaves_; }

 private:
  // Lists of vertices 0..upto-1 built from the chosen classes.
  void build_lists(std::uint32_t upto) {
    lists_.assign(std::size_t{s_} * k_, 0);
    std::vector<std::uint32_t> fill(s_, 0);
    for (std::size_t c = 0; c < chosen_.size(); ++c)
      for (Mask m = chosen_[c]; m != 0; m &= m - 1) {
        const auto u = static_cast<std::uint32_t>(std::countr_zero(m));
        if (u < upto) lists_[std::size_t{u} * k_ + fill[u]++] = static_cast<Colour>(c + 1);
      }
  }

  // Final form of a bad assignment: vertices from `upto` on get {1..k}, and
  // colours are renamed by first appearance.
  void finish(std::uint32_t upto) {
    for (std::uint32_t w = upto; w < s_; ++w)
      for (std::uint32_t i = 0; i < k_; ++i) lists_[std::size_t{w} * k_ + i] = 0;
    std::vector<Colour> rename(chosen_.size() + 1, 0);
    Colour next = 1;
    for (std::size_t j = 0; j < std::size_t{upto} * k_; ++j) {
      Colour& c = lists_[j];
      if (rename[c] == 0) rename[c] = next++;
      c = rename[c];
    }
    for (std::uint32_t u = 0; u < upto; ++u)
      std::sort(lists_.begin() + static_cast<std::ptrdiff_t>(std::size_t{u} * k_),
                lists_.begin() + static_cast<std::ptrdiff_t>(std::size_t{u + 1} * k_));
    for (std::uint32_t w = upto; w < s_; ++w)
      for (std::uint32_t i = 0; i < k_; ++i) lists_[std::size_t{w} * k_ + i] = i + 1;
  }

  bool descend(std::uint32_t v, std::size_t start) {
    if (count_[v] == k_) {
      build_lists(v + 1);
      if (!colourer_.colourable(lists_, v + 1)) {
        finish(v + 1);
        return true;
      }
      if (v + 1 == s_) {
        ++leaves_;
        return false;
      }
      return descend(v + 1, 0);
    }
    const auto& group = groups_[v];
    for (std::size_t i = start; i < group.size(); ++i) {
      const Mask m = group[i];
      bool fits = true;
      for (Mask rest = m; rest != 0 && fits; rest &= rest - 1)
        fits = count_[static_cast<std::size_t>(std::countr_zero(rest))] < k_;
      if (!fits) continue;
      for (Mask rest = m; rest != 0; rest &= rest - 1) ++count_[static_cast<std::size_t>(std::countr_zero(rest))];
      chosen_.push_back(m);
      if (descend(v, i)) return true;
      chosen_.pop_back();
      for (Mask rest = m; rest != 0; rest &= rest - 1) --count_[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    return false;
  }

  std::vector<Mask> adj_;
  std::uint32_t k_;
  std::uint32_t s_;
  std::vector<std::vector<Mask>> groups_;  // tight classes by smallest vertex
  std::vector<std::uint32_t> count_;       // classes containing each vertex
  std::vector<Mask> chosen_;
  std::vector<Colour> lists_;
  SmallListColourer colourer_;
  std::uint64_t leaves_ = 0;
};

// Vertices of the k-core (iteratively strip vertices of degree < k), ascending.
inline std::vector<Vertex> k_core(const Graph& g, std::uint32_t k) {
  std::vector<std::uint32_t> degree(g.order());
  std::vector<char> removed(g.order(), 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < k) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbours(v)) {
      if (!removed[w] && --degree[w] < k) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed[v]) core.push_back(v);
  return core;
}

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbours(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace detail

/// Exact chromatic number: clique lower bound, DSATUR upper bound, then
/// backtracking on each k in between.
inline std::uint32_t chromatic_number(const Graph& g, std::uint32_t cap = 16) {
  if (g.order() > cap) throw CapExceeded("graph too large for chromatic_number", g.order(), cap);
  if (g.order() == 0) return 0;
  const auto adj = detail::adjacency_masks(g);
  const detail::Mask all = g.order() == 32 ? ~detail::Mask{0} : ((detail::Mask{1} << g.order()) - 1);
  const std::uint32_t lower = detail::max_clique(adj, all, 0, 0);
  const std::uint32_t upper = detail::dsatur_colours(adj);
  for (std::uint32_t k = lower; k < upper; ++k) {
    std::vector<int> colour(g.order(), -1);
    if (detail::k_colourable(adj, colour, k, 0, 0)) return k;
  }
  return upper;
}

struct ChoosabilityReport {
  Graph graph;
  std::uint32_t k = 0;
  bool choosable = false;
  std::optional<ListAssignment> bad_assignment;  // when not choosable
  std::uint32_t universe = 0;                     // palette size k*n
  std::string method;                             // how the verdict was reached
  std::uint64_t assignments_checked = 0;
};

/// Exact k-choosability. A graph is k-choosable iff its k-core is, and iff
/// every component of the core is. Cores beyond `cap` vertices are refused.
inline ChoosabilityReport is_k_choosable(const Graph& g, std::uint32_t k, const ChoosabilityOptions& options = {}) {
  detail::require(k >= 1, "k must be >= 1");
  ChoosabilityReport r;
  r.graph = g;
  r.k = k;
  r.universe = k * std::max<std::uint32_t>(g.order(), 1);
  const std::vector<Vertex> core = detail::k_core(g, k);
  if (core.empty()) {
    r.choosable = true;
    r.method = "k-core empty";
    return r;
  }
  if (core.size() > options.cap) throw CapExceeded("k-core too large for choosability enumeration", core.size(), options.cap);

  auto bad_with = [&](const std::vector<Vertex>& part, const std::vector<Colour>& part_lists) {
    std::vector<Colour> flat(std::size_t{g.order()} * k);
    for (std::size_t v = 0; v < g.order(); ++v)
      for (std::uint32_t i = 0; i < k; ++i) flat[v * k + i] = i + 1;
    for (std::size_t j = 0; j < part.size(); ++j)
      for (std::uint32_t i = 0; i < k; ++i) flat[std::size_t{part[j]} * k + i] = part_lists[j * k + i];
    r.bad_assignment = ListAssignment(k, r.universe, std::move(flat));
  };

  const Graph core_graph = g.induced(core);
  for (const auto& local : detail::connected_components(core_graph)) {
    std::vector<Vertex> part;
    for (Vertex v : local) part.push_back(core[v]);
    const Graph h = g.induced(part);
    if (chromatic_number(h, options.chromatic_cap) > k) {
      std::vector<Colour> lists(part.size() * k);
      for (std::size_t j = 0; j < part.size(); ++j)
        for (std::uint32_t i = 0; i < k; ++i) lists[j * k + i] = i + 1;
      bad_with(part, lists);
      r.method = "chromatic number exceeds k";
      return r;
    }
    detail::CanonicalEnumerator search(detail::adjacency_masks(h), k);
    const bool bad = search.find_bad();
    r.assignments_checked += search.leaves();
    if (bad) {
      bad_with(part, search.lists());
      r.method = "enumeration";
      return r;
    }
  }
  r.choosable = true;
  r.method = "enumeration";
  return r;
}

/// Smallest k with G k-choosable; chi(G) <= ch(G) <= max degree + 1.
inline std::uint32_t choice_number(const Graph& g, const ChoosabilityOptions& options = {}) {
  if (g.order() == 0) return 0;
  const std::vector<Vertex> core2 = detail::k_core(g, 1);
  std::uint32_t k = std::max<std::uint32_t>(1, chromatic_number(g.induced(core2), options.chromatic_cap));
  for (; k <= g.max_degree() + 1; ++k)
    if (is_k_choosable(g, k, options).choosable) return k;
  return g.max_degree() + 1;
}

struct GSearchCounterexample {
  Graph graph;
  std::string graph6;
  ListAssignment bad_assignment;
};

struct GSearchReport {
  std::vector<ForbiddenSpec> forbidden;
  std::uint32_t k = 0;
  std::uint32_t certified_g = 0;  // when exhausted: a lower bound only ("g >= certified_g")
  std::optional<GSearchCounterexample> counterexample;
  bool exhausted = false;
  std::uint32_t max_order_seen = 0;
  std::uint64_t graphs_read = 0;
  std::uint64_t graphs_tested = 0;  // the H-free ones
};

/// Certifies g(H, k) from a stream of graphs in non-decreasing order. The
/// counterexample is the first non-k-choosable H-free graph by order, ties
/// broken by the lexicographically smallest graph6 string.
inline GSearchReport g_search(std::span<const ForbiddenSpec> forbidden, std::uint32_t k,
                              const std::function<std::optional<Graph>()>& next_graph,
                              const ChoosabilityOptions& options = {}) {
  GSearchReport r;
  r.forbidden.assign(forbidden.begin(), forbidden.end());
  r.k = k;
  std::uint32_t previous = 0;
  while (auto g = next_graph()) {
    if (g->order() < previous)
      throw ParseError("graph stream is not in non-decreasing order of vertex count");
    if (r.counterexample && g->order() > r.counterexample->graph.order()) break;
    previous = g->order();
    ++r.graphs_read;
    r.max_order_seen = std::max(r.max_order_seen, g->order());
    if (!is_free_of(*g, forbidden)) continue;
    ++r.graphs_tested;
    ChoosabilityReport c = is_k_choosable(*g, k, options);
    if (c.choosable) continue;
    std::string code = to_graph6(*g);
    if (!r.counterexample || code < r.counterexample->graph6)
      r.counterexample = GSearchCounterexample{std::move(*g), std::move(code), std::move(*c.bad_assignment)};
  }
  if (r.counterexample) {
    r.certified_g = r.counterexample->graph.order() - 1;
  } else {
    r.exhausted = true;
    r.certified_g = r.max_order_seen;
  }
  return r;
}

inline GSearchReport g_search(std::span<const ForbiddenSpec> forbidden, std::uint32_t k, Graph6Reader& stream,
                              const ChoosabilityOptions& options = {}) {
  return g_search(forbidden, k, [&]() { return stream.next(); }, options);
}

}  // namespace rlc
