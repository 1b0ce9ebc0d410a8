#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlc/colouring.hpp"
#include "rlc/error.hpp"
#include "rlc/exact.hpp"
#include "rlc/generators.hpp"
#include "rlc/graph.hpp"
#include "rlc/list_assignment.hpp"

namespace rlc {

/// floor(n/delta) disjoint copies of the d-blow-up G' of g0, then isolated
/// filler vertices up to n. Copy c occupies [c|G'|, (c+1)|G'|); inside a copy
/// base vertex v owns the class {v d, ..., v d + d - 1}.
struct GadgetInstance {
  Graph graph;
  Graph g0;
  ListAssignment planted;  // lists of g0 under which g0 is not colourable
  std::uint32_t d = 0;
  std::uint32_t n = 0;
  std::uint32_t delta = 0;
  std::uint32_t copies = 0;
  std::vector<std::vector<std::vector<Vertex>>> classes;  // [copy][base vertex] -> A_v

  std::uint32_t k() const noexcept { return planted.k(); }
  std::uint32_t copy_order() const noexcept { return d * g0.order(); }
  std::uint32_t filler() const noexcept { return n - copies * copy_order(); }
};

/// Thrown when the planted lists admit a colouring of g0; carries it.
class ColourablePlantedLists : public InvalidArgument {
 public:
  explicit ColourablePlantedLists(Colouring proof)
      : InvalidArgument("planted lists are colourable; no bad copy can exist"), proof_(std::move(proof)) {}
  const Colouring& proof() const noexcept { return proof_; }

 private:
  Colouring proof_;
};

inline GadgetInstance build_gadget(const Graph& g0, const ListAssignment& l0, std::uint32_t d, std::uint32_t n,
                                   std::uint32_t delta, const SolverOptions& options = {}) {
  detail::require(g0.order() >= 1, "base graph must have a vertex");
  detail::require(l0.order() == g0.order(), "planted lists must cover the base graph");
  detail::require(delta >= 1 && delta <= n, "need 1 <= delta <= n");
  detail::require(std::uint64_t{d} * g0.order() <= delta, "blow-up exceeds the degree budget: d |V(g0)| > delta");
  std::vector<Vertex> all(g0.order());
  for (Vertex v = 0; v < g0.order(); ++v) all[v] = v;
  if (auto proof = exact_list_colouring(g0, all, l0, options)) throw ColourablePlantedLists(std::move(*proof));

  GadgetInstance inst;
  inst.g0 = g0;
  inst.planted = l0;
  inst.d = d;
  inst.n = n;
  inst.delta = delta;
  inst.copies = n / delta;
  const std::uint32_t size = inst.copy_order();
  std::vector<Edge> es;
  if (d >= 1) {
    const BlowUp copy = blow_up(g0, d);
    for (std::uint32_t c = 0; c < inst.copies; ++c)
      for (const Edge& e : copy.graph.edges()) es.push_back({c * size + e.u, c * size + e.v});
  }
  inst.graph = Graph::from_edges(n, es);
  inst.classes.assign(inst.copies, std::vector<std::vector<Vertex>>(g0.order()));
  for (std::uint32_t c = 0; c < inst.copies; ++c)
    for (Vertex v = 0; v < g0.order(); ++v)
      for (std::uint32_t j = 0; j < d; ++j) inst.classes[c][v].push_back(c * size + v * d + j);
  return inst;
}

/// Some copy has, for every base vertex v, a vertex of A_v whose list is
/// exactly the planted list of v.
inline bool has_bad_copy(const GadgetInstance& inst, const ListAssignment& l) {
  detail::require(l.order() == inst.graph.order(), "assignment does not cover the gadget");
  if (l.k() != inst.planted.k()) return false;
  for (const auto& copy : inst.classes) {
    bool bad = true;
    for (Vertex v = 0; v < inst.g0.order() && bad; ++v) {
      const auto want = inst.planted.list(v);
      bad = std::any_of(copy[v].begin(), copy[v].end(), [&](Vertex x) {
        const auto got = l.list(x);
        return std::equal(got.begin(), got.end(), want.begin(), want.end());
      });
    }
    if (bad) return true;
  }
  return false;
}

/// {"base":{"n":4,"edges":[[0,1],...]},"lists":[[1,2,3],...],"d":1,"n":8,"delta":4}
inline GadgetInstance gadget_from_json(const nlohmann::json& j, const SolverOptions& options = {}) {
  try {
    const auto& base = j.at("base");
    std::vector<Edge> es;
    for (const auto& e : base.at("edges")) es.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
    const Graph g0 = Graph::from_edges(base.at("n").get<std::uint32_t>(), es);
    const auto lists = j.at("lists").get<std::vector<std::vector<Colour>>>();
    const ListAssignment l0 = ListAssignment::from_lists(lists, j.value("m", 0U));
    return build_gadget(g0, l0, j.at("d").get<std::uint32_t>(), j.at("n").get<std::uint32_t>(),
                        j.at("delta").get<std::uint32_t>(), options);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad gadget description: ") + e.what());
  }
}

inline GadgetInstance read_gadget_file(const std::string& path, const SolverOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open gadget file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("gadget file " + path + " is not valid JSON: " + e.what());
  }
  return gadget_from_json(j, options);
}

inline nlohmann::json gadget_to_json(const GadgetInstance& inst) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : inst.g0.edges()) edges.push_back({e.u, e.v});
  nlohmann::json lists = nlohmann::json::array();
  for (Vertex v = 0; v < inst.g0.order(); ++v) {
    auto row = inst.planted.list(v);
    lists.push_back(std::vector<Colour>(row.begin(), row.end()));
  }
  return {{"base", {{"n", inst.g0.order()}, {"edges", edges}}}, {"lists", lists}, {"d", inst.d},
          {"n", inst.n},   {"delta", inst.delta}};
}

}  // namespace rlc
