#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "rlc/colouring.hpp"
#include "rlc/error.hpp"
#include "rlc/graph.hpp"
#include "rlc/list_assignment.hpp"

namespace rlc {

struct SolverOptions {
  // Largest vertex set the backtracking search accepts. Lists of size <= 2
  // go through 2-SAT instead, which has no cap.
  std::uint32_t exact_cap = 64;
};

namespace detail {

/// A list-colouring instance on local vertices 0..s-1.
struct LocalProblem {
  std::vector<Vertex> vertices;                 // local -> global
  std::vector<std::vector<std::uint32_t>> adj;  // local adjacency
  std::vector<std::span<const Colour>> lists;

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(vertices.size()); }
};

/// Restricts `g` to `vertices` (sorted, duplicate-free). Only edges of `g`
/// between two members are kept.
inline LocalProblem make_local(const Graph& g, std::span<const Vertex> vertices, const ListAssignment& l) {
  LocalProblem p;
  p.vertices.assign(vertices.begin(), vertices.end());
  if (!std::is_sorted(p.vertices.begin(), p.vertices.end())) std::sort(p.vertices.begin(), p.vertices.end());
  require(std::adjacent_find(p.vertices.begin(), p.vertices.end()) == p.vertices.end(),
          "vertex set contains duplicates");
  p.adj.resize(p.vertices.size());
  p.lists.reserve(p.vertices.size());
  for (std::uint32_t i = 0; i < p.order(); ++i) {
    const Vertex v = p.vertices[i];
    require(v < g.order() && v < l.order(), "vertex outside graph or assignment");
    p.lists.push_back(l.list(v));
    for (Vertex w : g.neighbours(v)) {
      auto it = std::lower_bound(p.vertices.begin(), p.vertices.end(), w);
      if (it != p.vertices.end() && *it == w) p.adj[i].push_back(static_cast<std::uint32_t>(it - p.vertices.begin()));
    }
  }
  return p;
}

/// Exact list colouring when every list has at most two colours: variable
/// x_v means "v takes the first colour of its list", and each shared colour
/// on an edge forbids one pair of literals.
class TwoSatColourer {
 public:
  explicit TwoSatColourer(const LocalProblem& p) : p_(p), implications_(2 * std::size_t{p.order()}) {
    for (std::uint32_t v = 0; v < p_.order(); ++v) {
      require(p_.lists[v].size() >= 1 && p_.lists[v].size() <= 2, "2-SAT route needs lists of size 1 or 2");
      if (p_.lists[v].size() == 1) add_clause(literal(v, 0), literal(v, 0));
    }
    for (std::uint32_t v = 0; v < p_.order(); ++v) {
      for (std::uint32_t w : p_.adj[v]) {
        if (w < v) continue;
        for (std::uint32_t i = 0; i < p_.lists[v].size(); ++i)
          for (std::uint32_t j = 0; j < p_.lists[w].size(); ++j)
            if (p_.lists[v][i] == p_.lists[w][j]) add_clause(negate(literal(v, i)), negate(literal(w, j)));
      }
    }
  }

  /// Local colours (parallel to p.vertices), or nothing when unsatisfiable.
  std::optional<std::vector<Colour>> solve() {
    const std::uint32_t nodes = static_cast<std::uint32_t>(implications_.size());
    component_.assign(nodes, kUnset);
    index_.assign(nodes, kUnset);
    low_.assign(nodes, 0);
    on_stack_.assign(nodes, 0);
    for (std::uint32_t s = 0; s < nodes; ++s)
      if (index_[s] == kUnset) strongconnect(s);
    std::vector<Colour> out(p_.order());
    for (std::uint32_t v = 0; v < p_.order(); ++v) {
      const std::uint32_t pos = 2 * v;
      const std::uint32_t neg = 2 * v + 1;
      if (component_[pos] == component_[neg]) return std::nullopt;
      // Tarjan numbers components in reverse topological order.
      const bool first = component_[pos] < component_[neg];
      out[v] = p_.lists[v][first || p_.lists[v].size() == 1 ? 0 : 1];
    }
    return out;
  }

 private:
  static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

  // Node 2v is x_v (first colour), 2v+1 is its negation (second colour).
  static std::uint32_t literal(std::uint32_t v, std::uint32_t position) { return 2 * v + (position == 0 ? 0 : 1); }
  static std::uint32_t negate(std::uint32_t lit) { return lit ^ 1U; }

  void add_clause(std::uint32_t a, std::uint32_t b) {  // a OR b
    implications_[negate(a)].push_back(b);
    implications_[negate(b)].push_back(a);
  }

  void strongconnect(std::uint32_t root) {
    struct Frame {
      std::uint32_t node;
      std::uint32_t next_edge;
    };
    std::vector<Frame> frames{{root, 0}};
    index_[root] = low_[root] = counter_++;
    stack_.push_back(root);
    on_stack_[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& out = implications_[f.node];
      if (f.next_edge < out.size()) {
        const std::uint32_t w = out[f.next_edge++];
        if (index_[w] == kUnset) {
          index_[w] = low_[w] = counter_++;
          stack_.push_back(w);
          on_stack_[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack_[w]) {
          low_[f.node] = std::min(low_[f.node], index_[w]);
        }
        continue;
      }
      const std::uint32_t v = f.node;
      if (low_[v] == index_[v]) {
        std::uint32_t w = 0;
        do {
          w = stack_.back();
          stack_.pop_back();
          on_stack_[w] = 0;
          component_[w] = components_;
        } while (w != v);
        ++components_;
      }
      frames.pop_back();
      if (!frames.empty()) low_[frames.back().node] = std::min(low_[frames.back().node], low_[v]);
    }
  }

  const LocalProblem& p_;
  std::vector<std::vector<std::uint32_t>> implications_;
  std::vector<std::uint32_t> component_, index_, low_, stack_;
  std::vector<char> on_stack_;
  std::uint32_t counter_ = 0;
  std::uint32_t components_ = 0;
};

/// Backtracking list colouring: most-constrained vertex first (ties to the
/// smallest index), colours in ascending order, forward checking on the
/// neighbours' remaining options.
class BacktrackColourer {
 public:
  explicit BacktrackColourer(const LocalProblem& p) : p_(p) {
    offsets_.resize(p_.order() + 1, 0);
    for (std::uint32_t v = 0; v < p_.order(); ++v)
      offsets_[v + 1] = offsets_[v] + static_cast<std::uint32_t>(p_.lists[v].size());
    blocked_.assign(offsets_.back(), 0);
    available_.resize(p_.order());
    for (std::uint32_t v = 0; v < p_.order(); ++v) available_[v] = static_cast<std::uint32_t>(p_.lists[v].size());
    colour_.assign(p_.order(), 0);
  }

  std::optional<std::vector<Colour>> solve() {
    if (search(p_.order())) return colour_;
    return std::nullopt;
  }

 private:
  bool search(std::uint32_t remaining) {
    if (remaining == 0) return true;
    std::uint32_t best = kNone;
    for (std::uint32_t v = 0; v < p_.order(); ++v) {
      if (colour_[v] != 0) continue;
      if (best == kNone || available_[v] < available_[best]) best = v;
      if (available_[best] == 0) return false;
    }
    const std::uint32_t v = best;
    for (std::uint32_t i = 0; i < p_.lists[v].size(); ++i) {
      if (blocked_[offsets_[v] + i] != 0) continue;
      const Colour c = p_.lists[v][i];
      colour_[v] = c;
      bool wiped_out = false;
      for (std::uint32_t w : p_.adj[v]) {
        if (colour_[w] != 0) continue;
        const std::uint32_t pos = position(w, c);
        if (pos == kNone) continue;
        if (blocked_[offsets_[w] + pos]++ == 0 && --available_[w] == 0) wiped_out = true;
      }
      if (!wiped_out && search(remaining - 1)) return true;
      for (std::uint32_t w : p_.adj[v]) {
        if (colour_[w] != 0) continue;
        const std::uint32_t pos = position(w, c);
        if (pos == kNone) continue;
        if (--blocked_[offsets_[w] + pos] == 0) ++available_[w];
      }
      colour_[v] = 0;
    }
    return false;
  }

  std::uint32_t position(std::uint32_t w, Colour c) const {
    const auto& l = p_.lists[w];
    for (std::uint32_t i = 0; i < l.size(); ++i) {
      if (l[i] == c) return i;
      if (l[i] > c) break;
    }
    return kNone;
  }

  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  const LocalProblem& p_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> blocked_;
  std::vector<std::uint32_t> available_;
  std::vector<Colour> colour_;
};

/// Local colours for the instance, nothing when none exists. Throws
/// CapExceeded when backtracking would be needed on more than `cap` vertices.
inline std::optional<std::vector<Colour>> solve_local(const LocalProblem& p, const SolverOptions& options) {
  if (p.order() == 0) return std::vector<Colour>{};
  const bool short_lists = std::all_of(p.lists.begin(), p.lists.end(), [](auto l) { return l.size() <= 2; });
  if (short_lists) return TwoSatColourer(p).solve();
  if (p.order() > options.exact_cap) throw CapExceeded("component too large for exact list colouring", p.order(), options.exact_cap);
  return BacktrackColourer(p).solve();
}

}  // namespace detail

/// Exact L-colourability of the subgraph of `g` induced by `vertices`.
/// Returns a colouring of exactly those vertices (others stay 0) or nothing.
inline std::optional<Colouring> exact_list_colouring(const Graph& g, std::span<const Vertex> vertices,
                                                     const ListAssignment& l, const SolverOptions& options = {}) {
  const detail::LocalProblem p = detail::make_local(g, vertices, l);
  auto local = detail::solve_local(p, options);
  if (!local) return std::nullopt;
  Colouring out(g.order());
  for (std::uint32_t i = 0; i < p.order(); ++i) out.colour[p.vertices[i]] = (*local)[i];
  return out;
}

}  // namespace rlc
