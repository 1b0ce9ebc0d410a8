#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rlc/error.hpp"

namespace rlc {

/// Order-of-growth expressions with every unspecified constant set to 1.
/// Values only indicate growth; they are not bounds with known constants.
struct OrderFormula {
  std::string id;
  std::map<std::string, double> params;
};

struct OrderValue {
  std::string id;
  std::map<std::string, double> params;
  double value = 0;
  std::map<std::string, double> extra;  // secondary outputs (e.g. the delta exponent)
  std::vector<std::string> flags;
};

struct OrderEntry {
  std::string id;
  std::vector<std::string> params;
  std::string expression;  // human-readable
  std::function<void(const std::map<std::string, double>&)> domain;
  std::function<double(const std::map<std::string, double>&)> value;
  std::function<std::map<std::string, double>(const std::map<std::string, double>&)> extra;
};

namespace detail {

inline void need(bool ok, const std::string& id, const std::string& what) {
  if (!ok) throw InvalidArgument(id + ": " + what);
}

inline bool is_integer(double x) { return std::isfinite(x) && std::floor(x) == x; }

inline std::function<void(const std::map<std::string, double>&)> domain_rt(std::string id) {
  return [id](const auto& p) {
    need(is_integer(p.at("r")) && p.at("r") >= 3, id, "r must be an integer >= 3");
    need(p.at("t") > 1, id, "t must be > 1");
  };
}

inline std::function<void(const std::map<std::string, double>&)> domain_int_x(std::string id, std::string first,
                                                                               double min_first, std::string second,
                                                                               double min_second) {
  return [=](const auto& p) {
    need(is_integer(p.at(first)) && p.at(first) >= min_first, id,
         first + " must be an integer >= " + std::to_string(static_cast<int>(min_first)));
    need(p.at(second) >= min_second, id, second + " must be >= " + std::to_string(min_second));
  };
}

inline std::vector<OrderEntry> make_registry() {
  using P = std::map<std::string, double>;
  std::vector<OrderEntry> r;
  auto add = [&](std::string id, std::vector<std::string> params, std::string expr, auto domain, auto value) {
    r.push_back({std::move(id), std::move(params), std::move(expr), domain, value, nullptr});
  };

  // Ramsey numbers versus a large clique
  add("R_clique_lower", {"r", "t"}, "t^((r+1)/2) / (log t)^((r+1)/2 - 1/(r-2))", domain_rt("R_clique_lower"),
      [](const P& p) {
        const double r = p.at("r"), t = p.at("t");
        return std::pow(t, (r + 1) / 2) / std::pow(std::log(t), (r + 1) / 2 - 1 / (r - 2));
      });
  add("R_clique_upper", {"r", "t"}, "t^(r-1) / (log t)^(r-2)", domain_rt("R_clique_upper"), [](const P& p) {
    const double r = p.at("r"), t = p.at("t");
    return std::pow(t, r - 1) / std::pow(std::log(t), r - 2);
  });
  add("R_odd_cycle_lower", {"l", "t"}, "t^(2l/(2l-1)) / (log t)^(2/(2l-1))",
      domain_int_x("R_odd_cycle_lower", "l", 2, "t", 1.0000001), [](const P& p) {
        const double l = p.at("l"), t = p.at("t");
        return std::pow(t, 2 * l / (2 * l - 1)) / std::pow(std::log(t), 2 / (2 * l - 1));
      });
  add("R_odd_cycle_upper", {"l", "t"}, "t^((l+1)/l) / (log t)^(1/l)",
      domain_int_x("R_odd_cycle_upper", "l", 2, "t", 1.0000001), [](const P& p) {
        const double l = p.at("l"), t = p.at("t");
        return std::pow(t, (l + 1) / l) / std::pow(std::log(t), 1 / l);
      });
  add("R_even_cycle_lower", {"l", "t"}, "t^((2l-1)/(2l-2)) / log t",
      domain_int_x("R_even_cycle_lower", "l", 2, "t", 1.0000001), [](const P& p) {
        const double l = p.at("l"), t = p.at("t");
        return std::pow(t, (2 * l - 1) / (2 * l - 2)) / std::log(t);
      });
  add("R_even_cycle_upper", {"l", "t"}, "(t / log t)^(l/(l-1))",
      domain_int_x("R_even_cycle_upper", "l", 2, "t", 1.0000001), [](const P& p) {
        const double l = p.at("l"), t = p.at("t");
        return std::pow(t / std::log(t), l / (l - 1));
      });

  // chromatic number of H-free graphs on n vertices
  add("chi_Kr_free", {"r", "n"}, "(n / log n)^((r-2)/(r-1))", domain_int_x("chi_Kr_free", "r", 3, "n", 2),
      [](const P& p) {
        const double r = p.at("r"), n = p.at("n");
        return std::pow(n / std::log(n), (r - 2) / (r - 1));
      });
  add("chi_odd_cycle_free", {"l", "n"}, "(n / log n)^(1/(l+1))", domain_int_x("chi_odd_cycle_free", "l", 2, "n", 2),
      [](const P& p) {
        const double l = p.at("l"), n = p.at("n");
        return std::pow(n / std::log(n), 1 / (l + 1));
      });
  add("chi_even_cycle_free", {"l", "n"}, "n^(1/l) / log n", domain_int_x("chi_even_cycle_free", "l", 2, "n", 2),
      [](const P& p) {
        const double l = p.at("l"), n = p.at("n");
        return std::pow(n, 1 / l) / std::log(n);
      });

  // choice number of the complete r-partite graph with parts of size m
  add("ch_multipartite", {"m", "r"}, "r log m", domain_int_x("ch_multipartite", "r", 2, "m", 2),
      [](const P& p) { return p.at("r") * std::log(p.at("m")); });

  // g(H, k) for chi(H) = t + 1
  add("g_general_upper", {"t", "k"}, "t e^(k/t)", domain_int_x("g_general_upper", "t", 2, "k", 1),
      [](const P& p) { return p.at("t") * std::exp(p.at("k") / p.at("t")); });
  add("g_clique_lower", {"r", "k"}, "k^((r-1)/(r-2)) (log k)^(-1/(r-2))", domain_int_x("g_clique_lower", "r", 3, "k", 2),
      [](const P& p) {
        const double r = p.at("r"), k = p.at("k");
        return std::pow(k, (r - 1) / (r - 2)) * std::pow(std::log(k), -1 / (r - 2));
      });
  add("g_clique_upper", {"r", "k"}, "k^((r+1)/(r-1)) (log k)^((r+1)/(r-1) - 2/((r-1)(r-2)))",
      domain_int_x("g_clique_upper", "r", 3, "k", 2), [](const P& p) {
        const double r = p.at("r"), k = p.at("k");
        return std::pow(k, (r + 1) / (r - 1)) * std::pow(std::log(k), (r + 1) / (r - 1) - 2 / ((r - 1) * (r - 2)));
      });
  add("g_odd_cycle_lower", {"l", "k"}, "k^(l+1) (log k)^(-l)", domain_int_x("g_odd_cycle_lower", "l", 2, "k", 2),
      [](const P& p) {
        const double l = p.at("l"), k = p.at("k");
        return std::pow(k, l + 1) * std::pow(std::log(k), -l);
      });
  add("g_odd_cycle_upper", {"l", "k"}, "k^(2l) (log k)^2", domain_int_x("g_odd_cycle_upper", "l", 2, "k", 2),
      [](const P& p) {
        const double l = p.at("l"), k = p.at("k");
        return std::pow(k, 2 * l) * std::pow(std::log(k), 2);
      });
  add("g_even_cycle_lower", {"l", "k"}, "k^l", domain_int_x("g_even_cycle_lower", "l", 2, "k", 2),
      [](const P& p) { return std::pow(p.at("k"), p.at("l")); });
  add("g_even_cycle_upper", {"l", "k"}, "(k log k)^(2l-2)", domain_int_x("g_even_cycle_upper", "l", 2, "k", 2),
      [](const P& p) {
        const double l = p.at("l"), k = p.at("k");
        return std::pow(k * std::log(k), 2 * l - 2);
      });

  // exponent of n in the palette threshold for K_r-, C_{2l+1}- and C_{2l}-free
  // graphs; the delta exponent is 2/k in all three
  auto delta_exponent = [](const P& p) { return P{{"delta_exponent", 2.0 / p.at("k")}}; };
  r.push_back({"thm4a_exponent", {"r", "k"}, "k^(-(2r-3)/(r-2)) (log k)^(1/(r-2))",
               domain_int_x("thm4a_exponent", "r", 3, "k", 2),
               [](const P& p) {
                 const double r = p.at("r"), k = p.at("k");
                 return std::pow(k, -(2 * r - 3) / (r - 2)) * std::pow(std::log(k), 1 / (r - 2));
               },
               delta_exponent});
  r.push_back({"thm4b_exponent", {"l", "k"}, "k^(-(l+2)) (log k)^l", domain_int_x("thm4b_exponent", "l", 2, "k", 2),
               [](const P& p) {
                 const double l = p.at("l"), k = p.at("k");
                 return std::pow(k, -(l + 2)) * std::pow(std::log(k), l);
               },
               delta_exponent});
  r.push_back({"thm4c_exponent", {"l", "k"}, "k^(-(l+1))", domain_int_x("thm4c_exponent", "l", 2, "k", 2),
               [](const P& p) { return std::pow(p.at("k"), -(p.at("l") + 1)); }, delta_exponent});
  return r;
}

}  // namespace detail

inline const std::vector<OrderEntry>& order_registry() {
  static const std::vector<OrderEntry> registry = detail::make_registry();
  return registry;
}

inline const OrderEntry* find_order_formula(const std::string& id) {
  for (const OrderEntry& e : order_registry())
    if (e.id == id) return &e;
  return nullptr;
}

inline OrderValue evaluate_order(const OrderFormula& f) {
  const OrderEntry* e = find_order_formula(f.id);
  if (e == nullptr) throw InvalidArgument("unknown formula id: " + f.id);
  for (const std::string& name : e->params)
    if (!f.params.count(name)) throw InvalidArgument(f.id + ": missing parameter " + name);
  for (const auto& [name, v] : f.params) {
    (void)v;
    if (std::find(e->params.begin(), e->params.end(), name) == e->params.end())
      throw InvalidArgument(f.id + ": unexpected parameter " + name);
  }
  e->domain(f.params);
  OrderValue out;
  out.id = f.id;
  out.params = f.params;
  out.value = e->value(f.params);
  if (e->extra) out.extra = e->extra(f.params);
  out.flags = {"order-of-growth only", "constants set to 1"};
  return out;
}

}  // namespace rlc
