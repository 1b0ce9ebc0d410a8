#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/graph.hpp"

namespace rlc {

/// A forbidden (not necessarily induced) subgraph: K_t, C_l or the star K_{1,s}.
struct ForbiddenSpec {
  enum class Kind { Clique, Cycle, Star };

  Kind kind;
  std::uint32_t size;  // t, l or s respectively

  static ForbiddenSpec clique(std::uint32_t t) { return {Kind::Clique, t}; }
  static ForbiddenSpec cycle(std::uint32_t l) { return {Kind::Cycle, l}; }
  static ForbiddenSpec star(std::uint32_t s) { return {Kind::Star, s}; }

  std::string name() const {
    switch (kind) {
      case Kind::Clique: return "K" + std::to_string(size);
      case Kind::Cycle: return "C" + std::to_string(size);
      case Kind::Star: return "K1," + std::to_string(size);
    }
    return {};
  }

  /// Accepts "K3", "C5" and "K1,2".
  static ForbiddenSpec parse(std::string_view text) {
    auto number = [&](std::string_view digits) {
      if (digits.empty() || digits.size() > 9) throw ParseError("bad forbidden-graph spec: " + std::string(text));
      std::uint32_t value = 0;
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("bad forbidden-graph spec: " + std::string(text));
        value = value * 10 + static_cast<std::uint32_t>(c - '0');
      }
      return value;
    };
    if (text.size() < 2) throw ParseError("bad forbidden-graph spec: " + std::string(text));
    const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    std::string_view rest = text.substr(1);
    if (head == 'K' && rest.starts_with("1,")) return star(number(rest.substr(2)));
    if (head == 'K') return clique(number(rest));
    if (head == 'C') return cycle(number(rest));
    throw ParseError("bad forbidden-graph spec: " + std::string(text));
  }

  friend bool operator==(const ForbiddenSpec&, const ForbiddenSpec&) = default;
};

namespace detail {

// Extends `clique` by candidates (all > the last member and adjacent to every
// member); `need` more vertices are required.
inline bool extend_clique(const Graph& g, std::vector<Vertex>& candidates, std::uint32_t need) {
  if (need == 0) return true;
  if (candidates.size() < need) return false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates.size() - i < need) break;
    const Vertex v = candidates[i];
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    if (extend_clique(g, next, need - 1)) return true;
  }
  return false;
}

// Paths start at `root` and only visit vertices > root, so each cycle is found
// from its smallest vertex.
inline bool extend_cycle(const Graph& g, Vertex root, Vertex tip, std::uint32_t length,
                         std::uint32_t target, std::vector<char>& on_path) {
  if (length == target) return g.adjacent(tip, root);
  for (Vertex w : g.neighbours(tip)) {
    if (w <= root || on_path[w]) continue;
    on_path[w] = 1;
    const bool found = extend_cycle(g, root, w, length + 1, target, on_path);
    on_path[w] = 0;
    if (found) return true;
  }
  return false;
}

}  // namespace detail

inline bool contains_clique(const Graph& g, std::uint32_t t) {
  detail::require(t >= 1, "clique size must be >= 1");
  if (t == 1) return g.order() >= 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 < t) continue;
    std::vector<Vertex> candidates;
    for (Vertex w : g.neighbours(v))
      if (w > v && g.degree(w) + 1 >= t) candidates.push_back(w);
    if (detail::extend_clique(g, candidates, t - 1)) return true;
  }
  return false;
}

/// Cycle of exactly `length` vertices as a subgraph. Path enumeration with a
/// length cap: fine for the small host graphs of the choosability lab, not
/// meant for large dense hosts.
inline bool contains_cycle(const Graph& g, std::uint32_t length) {
  detail::require(length >= 3, "cycle length must be >= 3");
  if (length > g.order()) return false;
  std::vector<char> on_path(g.order(), 0);
  for (Vertex root = 0; root < g.order(); ++root) {
    on_path[root] = 1;
    const bool found = detail::extend_cycle(g, root, root, 1, length, on_path);
    on_path[root] = 0;
    if (found) return true;
  }
  return false;
}

inline bool contains_forbidden(const Graph& g, const ForbiddenSpec& h) {
  switch (h.kind) {
    case ForbiddenSpec::Kind::Clique:
      detail::require(h.size >= 2, "forbidden clique needs t >= 2");
      return contains_clique(g, h.size);
    case ForbiddenSpec::Kind::Cycle:
      return contains_cycle(g, h.size);
    case ForbiddenSpec::Kind::Star:
      detail::require(h.size >= 1, "forbidden star needs s >= 1");
      return g.max_degree() >= h.size;
  }
  return false;
}

inline bool is_free_of(const Graph& g, std::span<const ForbiddenSpec> family) {
  for (const ForbiddenSpec& h : family)
    if (contains_forbidden(g, h)) return false;
  return true;
}

}  // namespace rlc
