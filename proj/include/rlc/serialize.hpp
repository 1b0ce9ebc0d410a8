#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlc/bounds.hpp"
#include "rlc/choosability.hpp"
#include "rlc/colouring.hpp"
#include "rlc/experiment.hpp"
#include "rlc/forbidden.hpp"
#include "rlc/graph.hpp"
#include "rlc/list_assignment.hpp"
#include "rlc/order_formulas.hpp"
#include "rlc/solver.hpp"
#include "rlc/witness.hpp"

namespace rlc {

using json = nlohmann::ordered_json;

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline json to_json(const ListAssignment& l) {
  json lists = json::array();
  for (Vertex v = 0; v < l.order(); ++v) {
    auto row = l.list(v);
    lists.push_back(std::vector<Colour>(row.begin(), row.end()));
  }
  return {{"k", l.k()}, {"m", l.m()}, {"lists", std::move(lists)}};
}

inline json to_json(const Colouring& c) { return c.colour; }

inline json to_json(const Witness& w) {
  json edges = json::array();
  for (const Edge& e : w.edges) edges.push_back({e.u, e.v});
  json f = json::array();
  for (const auto& [v, c] : w.f_edges) f.push_back({v, c});
  return {{"vertices", w.vertices},
          {"edges", std::move(edges)},
          {"palette", w.palette},
          {"f_edges", std::move(f)},
          {"checks",
           {{"connected", w.checks.connected},
            {"min_colour_multiplicity", w.checks.min_colour_multiplicity},
            {"max_matching", w.checks.max_matching},
            {"hall_deficiency_j", w.checks.hall_deficiency_j},
            {"hall_set", w.checks.hall_set}}}};
}

inline json to_json(const WitnessReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"check", v.check}, {"detail", v.detail}});
  return {{"ok", r.ok()},
          {"order", r.order},
          {"palette_used", r.palette_used},
          {"max_matching", r.max_matching},
          {"hall_deficiency_j", r.hall_deficiency_j},
          {"min_colour_multiplicity", r.min_colour_multiplicity},
          {"violations", std::move(violations)}};
}

inline json to_json(const SolveResult& r) {
  json out = {{"colourable", r.colourable},
              {"components", r.components},
              {"max_component", r.max_component},
              {"by_unique", r.by_unique},
              {"by_matching", r.by_matching},
              {"by_exact", r.by_exact}};
  if (r.colouring) out["colouring"] = to_json(*r.colouring);
  return out;
}

inline json to_json(const ChoosabilityReport& r) {
  json out = {{"k", r.k}, {"choosable", r.choosable}, {"method", r.method},
              {"assignments_checked", r.assignments_checked}};
  if (r.bad_assignment) out["bad_assignment"] = to_json(*r.bad_assignment);
  return out;
}

inline json to_json(const GSearchReport& r) {
  std::vector<std::string> names;
  for (const auto& h : r.forbidden) names.push_back(h.name());
  json out = {{"forbidden", names},
              {"k", r.k},
              {"exhausted", r.exhausted},
              {"certified_g", r.certified_g},
              {"g_lower_bound_only", r.exhausted},
              {"graphs_read", r.graphs_read},
              {"graphs_tested", r.graphs_tested},
              {"max_order_seen", r.max_order_seen}};
  if (r.counterexample) {
    out["counterexample"] = {{"graph6", r.counterexample->graph6},
                             {"graph", to_json(r.counterexample->graph)},
                             {"bad_assignment", to_json(r.counterexample->bad_assignment)}};
  }
  return out;
}

inline json to_json(const EstimateRecord& r) {
  return {{"graph", r.graph},       {"n", r.n},
          {"delta", r.delta},       {"k", r.k},
          {"m", r.m},               {"trials", r.trials},
          {"successes", r.successes}, {"p_hat", r.p_hat},
          {"ci_low", r.ci_low},     {"ci_high", r.ci_high},
          {"seed", r.seed},         {"max_comp_p50", r.max_comp_p50},
          {"max_comp_max", r.max_comp_max}, {"errors", r.errors}};
}

inline json to_json(const ComponentReport& r) {
  std::map<std::uint32_t, std::uint64_t> histogram;
  for (std::uint32_t x : r.max_orders) ++histogram[x];
  json h = json::array();
  for (const auto& [order, count] : histogram) h.push_back({order, count});
  return {{"n", r.n},
          {"delta", r.delta},
          {"k", r.k},
          {"m", r.m},
          {"trials", r.trials},
          {"seed", r.seed},
          {"max_order_p50", r.p50},
          {"max_order_p90", r.p90},
          {"max_order_max", r.max},
          {"order_cap_20_log_n", r.order_cap},
          {"trials_exceeding_cap", r.exceeding_cap},
          {"tail_bound_at_cap", r.tail_bound},
          {"histogram", std::move(h)}};
}

inline json to_json(const GadgetProbability& p) {
  json out = {{"copies", p.copies},
              {"subsets", p.subsets.str()},
              {"q_copy", p.q()},
              {"p_bad_exists", p.p_bad()},
              {"colourable_upper", p.colourable()},
              {"exact", p.exact()}};
  if (p.exact() && p.exact_q_copy->str().size() < 4096) {
    out["q_copy_rational"] = p.exact_q_copy->str();
    out["p_bad_exists_rational"] = p.exact_p_bad_exists->str();
    out["colourable_upper_rational"] = p.exact_colourable_upper->str();
  }
  return out;
}

inline json to_json(const GadgetReport& r) {
  return {{"k", r.k},
          {"m", r.m},
          {"trials", r.trials},
          {"seed", r.seed},
          {"bad", r.bad},
          {"colourable", r.colourable},
          {"errors", r.errors},
          {"bad_but_colourable", r.bad_but_colourable},
          {"p_bad_hat", r.p_bad_hat},
          {"p_colourable_hat", r.p_colourable_hat},
          {"sigma_bad", r.sigma_bad},
          {"sigma_colourable", r.sigma_colourable},
          {"bad_within_3sigma", r.bad_within_3sigma},
          {"colourable_below_upper", r.colourable_below_upper},
          {"exact", to_json(r.exact)}};
}

namespace detail {

inline double param(const std::map<std::string, double>& p, const std::string& id, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw InvalidArgument(id + ": missing parameter " + name);
  return it->second;
}

inline std::uint64_t uparam(const std::map<std::string, double>& p, const std::string& id, const std::string& name) {
  const double v = param(p, id, name);
  if (!(v >= 0) || std::floor(v) != v) throw InvalidArgument(id + ": " + name + " must be a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

}  // namespace detail

/// Ids accepted by evaluate_bound besides the order-of-growth registry.
inline std::vector<std::string> exact_bound_ids() {
  return {"threshold_general", "threshold_hfree", "component_tail_bound", "gadget_probability", "claim2_ratio",
          "integral_bound_check"};
}

/// Evaluates any registered formula as {id, params, value, flags}.
inline json evaluate_bound(const std::string& id, const std::map<std::string, double>& p) {
  using detail::param;
  using detail::uparam;
  json params(json::value_t::object);
  for (const auto& [k, v] : p) params[k] = v;
  json out = {{"id", id}, {"params", params}};
  if (id == "threshold_general" || id == "threshold_hfree") {
    ThresholdQuery q{param(p, id, "n"), param(p, id, "delta"), static_cast<std::uint32_t>(uparam(p, id, "k")),
                     std::nullopt, std::nullopt};
    if (p.count("g")) q.g = p.at("g");
    if (id == "threshold_general") {
      const GeneralThreshold t = threshold_general(q);
      out["value"] = {{"m_growth", t.m_growth}, {"m_floor", t.m_floor}};
    } else {
      const HFreeThreshold t = threshold_hfree(q);
      out["value"] = {{"upper_growth", t.upper_growth}, {"lower_growth", t.lower_growth}, {"m_floor", t.m_floor}};
    }
    out["flags"] = json::array({"growth term only"});
  } else if (id == "component_tail_bound") {
    out["value"] = component_tail_bound(param(p, id, "n"), param(p, id, "delta"), param(p, id, "k"), param(p, id, "m"),
                                        param(p, id, "a"));
    out["flags"] = json::array();
  } else if (id == "gadget_probability") {
    const GadgetProbability g = gadget_probability(uparam(p, id, "n"), uparam(p, id, "delta"), uparam(p, id, "k"),
                                                   uparam(p, id, "m"), uparam(p, id, "d"), uparam(p, id, "order_g0"));
    out["value"] = to_json(g);
    out["flags"] = json::array({g.exact() ? "exact rational" : "extended precision float"});
  } else if (id == "claim2_ratio") {
    const Claim2Ratio c = claim2_ratio(param(p, id, "n"), param(p, id, "delta"), param(p, id, "k"), param(p, id, "m"),
                                       param(p, id, "i"));
    out["value"] = {{"exact_ratio", c.exact_ratio}, {"upper_bound", c.upper_bound}, {"within_upper", c.within_upper}};
    out["flags"] = json::array();
  } else if (id == "integral_bound_check") {
    const IntegralCheck c =
        integral_bound_check({param(p, id, "s"), param(p, id, "n"), param(p, id, "alpha"), param(p, id, "beta")});
    out["value"] = {{"quadrature_value", c.quadrature_value},
                    {"closed_form", c.closed_form},
                    {"holds", c.holds},
                    {"evaluations", c.quadrature.evaluations}};
    out["flags"] = json::array({"quadrature relative error 1e-6"});
  } else {
    const OrderValue v = evaluate_order({id, p});
    out["value"] = v.value;
    for (const auto& [name, x] : v.extra) out[name] = x;
    out["flags"] = v.flags;
  }
  return out;
}

}  // namespace rlc
