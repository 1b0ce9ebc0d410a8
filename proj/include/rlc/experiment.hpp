#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "rlc/bounds.hpp"
#include "rlc/dangerous.hpp"
#include "rlc/error.hpp"
#include "rlc/gadget.hpp"
#include "rlc/graph.hpp"
#include "rlc/list_assignment.hpp"
#include "rlc/random.hpp"
#include "rlc/solver.hpp"

namespace rlc {

inline constexpr double kWilsonZ95 = 1.959963984540054;

struct WilsonInterval {
  double low = 0;
  double high = 1;
};

inline WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kWilsonZ95) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z / (1 + z2 / n) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  // clamp rounding so that low <= p_hat <= high holds exactly at 0 and 1
  return {std::clamp(std::min(centre - half, p), 0.0, 1.0), std::clamp(std::max(centre + half, p), 0.0, 1.0)};
}

struct ExperimentOptions {
  unsigned workers = 1;
  SolverOptions solver;
};

/// Runs fn(t) for t in [0, trials) on `workers` threads. fn must only write
/// to per-trial state, so the result cannot depend on scheduling.
template <class Fn>
void run_trials(std::uint64_t trials, unsigned workers, Fn&& fn) {
  workers = std::max(1U, workers);
  if (workers == 1 || trials < 2) {
    for (std::uint64_t t = 0; t < trials; ++t) fn(t);
    return;
  }
  constexpr std::uint64_t kChunk = 64;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto body = [&]() {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= trials || failed.load()) return;
      const std::uint64_t end = std::min(trials, begin + kChunk);
      try {
        for (std::uint64_t t = begin; t < end; ++t) fn(t);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  }
  if (failure) std::rethrow_exception(failure);
}

struct EstimateRecord {
  std::string graph;  // graph spec
  std::uint32_t n = 0;
  std::uint32_t delta = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t errors = 0;  // trials that hit the solver cap; excluded from p_hat
  double p_hat = 0;
  double ci_low = 0;
  double ci_high = 1;
  std::uint64_t seed = 0;
  std::uint32_t max_comp_p50 = 0;
  std::uint32_t max_comp_max = 0;

  std::uint64_t valid_trials() const noexcept { return trials - errors; }
};

namespace detail {

enum class TrialStatus : std::uint8_t { NotColourable, Colourable, CapExceeded };

struct TrialOutcome {
  TrialStatus status = TrialStatus::NotColourable;
  std::uint32_t max_component = 0;
};

inline std::uint32_t lower_median(std::vector<std::uint32_t> xs) {
  if (xs.empty()) return 0;
  const std::size_t mid = (xs.size() - 1) / 2;
  std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid), xs.end());
  return xs[mid];
}

inline std::vector<TrialOutcome> colourability_trials(const Graph& g, std::uint32_t k, std::uint32_t m,
                                                      std::uint64_t trials, std::uint64_t seed,
                                                      const ExperimentOptions& options) {
  detail::require(trials >= 1, "trials must be >= 1");
  detail::require(k >= 1 && k <= m, "need 1 <= k <= m");
  std::vector<TrialOutcome> out(trials);
  run_trials(trials, options.workers, [&](std::uint64_t t) {
    const ListAssignment l = sample_assignment(g.order(), k, m, Seed{seed, t});
    const DangerousSubgraph d = dangerous_subgraph(g, l);
    out[t].max_component = d.max_order;
    try {
      out[t].status = is_colourable(d, l, options.solver).colourable ? TrialStatus::Colourable : TrialStatus::NotColourable;
    } catch (const CapExceeded&) {
      out[t].status = TrialStatus::CapExceeded;
    }
  });
  return out;
}

}  // namespace detail

/// Estimates P(G is L-colourable) for a random (k,m)-list-assignment. Trial t
/// uses Seed{seed, t}; any trial can be replayed with sample_assignment.
inline EstimateRecord mc_colourable(const Graph& g, std::uint32_t k, std::uint32_t m, std::uint64_t trials,
                                    std::uint64_t seed, const ExperimentOptions& options = {},
                                    const std::string& label = "") {
  const auto outcomes = detail::colourability_trials(g, k, m, trials, seed, options);
  EstimateRecord r;
  r.graph = label;
  r.n = g.order();
  r.delta = g.max_degree();
  r.k = k;
  r.m = m;
  r.trials = trials;
  r.seed = seed;
  std::vector<std::uint32_t> orders;
  orders.reserve(trials);
  for (const auto& o : outcomes) {
    if (o.status == detail::TrialStatus::Colourable) ++r.successes;
    if (o.status == detail::TrialStatus::CapExceeded) ++r.errors;
    orders.push_back(o.max_component);
    r.max_comp_max = std::max(r.max_comp_max, o.max_component);
  }
  r.max_comp_p50 = detail::lower_median(std::move(orders));
  const std::uint64_t valid = r.valid_trials();
  r.p_hat = valid == 0 ? 0.0 : static_cast<double>(r.successes) / static_cast<double>(valid);
  const WilsonInterval ci = wilson_interval(r.successes, valid);
  r.ci_low = ci.low;
  r.ci_high = ci.high;
  return r;
}

struct SweepResult {
  std::vector<EstimateRecord> rows;  // one per m, ascending
  std::optional<GeneralThreshold> general;
  std::optional<HFreeThreshold> hfree;
};

/// One estimate per palette size; every row reuses the master seed so rows
/// differ only in m.
inline SweepResult sweep(const Graph& g, const std::string& label, std::uint32_t k,
                         const std::vector<std::uint32_t>& m_values, std::uint64_t trials, std::uint64_t seed,
                         const ExperimentOptions& options = {}, std::optional<double> g_threshold = std::nullopt) {
  detail::require(!m_values.empty(), "sweep needs at least one m");
  detail::require(std::adjacent_find(m_values.begin(), m_values.end(), std::greater_equal<>()) == m_values.end(),
          "m values must be strictly ascending");
  SweepResult out;
  for (std::uint32_t m : m_values) out.rows.push_back(mc_colourable(g, k, m, trials, seed, options, label));
  const double delta = g.max_degree();
  if (g.order() >= 2 && delta >= 1 && delta < g.order()) {
    ThresholdQuery q{static_cast<double>(g.order()), delta, k, std::nullopt, g_threshold};
    out.general = threshold_general(q);
    if (g_threshold) out.hfree = threshold_hfree(q);
  }
  return out;
}

inline constexpr const char* kCsvHeader =
    "graph,n,delta,k,m,trials,successes,p_hat,ci_low,ci_high,seed,max_comp_p50,max_comp_max,errors";

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace detail

inline std::string csv_row(const EstimateRecord& r) {
  return detail::csv_field(r.graph) + ',' + std::to_string(r.n) + ',' + std::to_string(r.delta) + ',' +
         std::to_string(r.k) + ',' + std::to_string(r.m) + ',' + std::to_string(r.trials) + ',' +
         std::to_string(r.successes) + ',' + detail::format_double(r.p_hat) + ',' + detail::format_double(r.ci_low) +
         ',' + detail::format_double(r.ci_high) + ',' + std::to_string(r.seed) + ',' + std::to_string(r.max_comp_p50) +
         ',' + std::to_string(r.max_comp_max) + ',' + std::to_string(r.errors);
}

inline void write_csv(std::ostream& out, const std::vector<EstimateRecord>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << csv_row(r) << '\n';
}

struct ComponentReport {
  std::uint32_t n = 0;
  std::uint32_t delta = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> max_orders;  // per trial
  std::uint32_t p50 = 0;
  std::uint32_t p90 = 0;
  std::uint32_t max = 0;
  double order_cap = 0;             // 20 log n
  std::uint64_t exceeding_cap = 0;  // trials whose largest component is above order_cap
  double tail_bound = 0;            // n (e delta)^a (k^2/m)^a at a = order_cap
};

/// Distribution of the largest dangerous component over random assignments.
inline ComponentReport component_experiment(const Graph& g, std::uint32_t k, std::uint32_t m, std::uint64_t trials,
                                            std::uint64_t seed, const ExperimentOptions& options = {}) {
  detail::require(trials >= 1, "trials must be >= 1");
  detail::require(k >= 1 && k <= m, "need 1 <= k <= m");
  ComponentReport r;
  r.n = g.order();
  r.delta = g.max_degree();
  r.k = k;
  r.m = m;
  r.trials = trials;
  r.seed = seed;
  r.max_orders.assign(trials, 0);
  run_trials(trials, options.workers, [&](std::uint64_t t) {
    const ListAssignment l = sample_assignment(g.order(), k, m, Seed{seed, t});
    r.max_orders[t] = dangerous_subgraph(g, l).max_order;
  });
  std::vector<std::uint32_t> sorted = r.max_orders;
  std::sort(sorted.begin(), sorted.end());
  r.p50 = sorted[(sorted.size() - 1) / 2];
  r.p90 = sorted[static_cast<std::size_t>(std::ceil(0.9 * static_cast<double>(sorted.size()))) - 1];
  r.max = sorted.back();
  r.order_cap = component_order_cap(std::max<double>(g.order(), 1));
  r.exceeding_cap = static_cast<std::uint64_t>(
      std::count_if(sorted.begin(), sorted.end(), [&](std::uint32_t x) { return x > r.order_cap; }));
  r.tail_bound = component_tail_bound(std::max<double>(g.order(), 1), std::max<double>(r.delta, 1), k, m, r.order_cap);
  return r;
}

struct GadgetReport {
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t bad = 0;
  std::uint64_t colourable = 0;
  std::uint64_t errors = 0;
  std::uint64_t bad_but_colourable = 0;  // must stay 0: a bad copy forbids colouring
  double p_bad_hat = 0;
  double p_colourable_hat = 0;
  double sigma_bad = 0;         // binomial sd at the exact p_bad_exists
  double sigma_colourable = 0;  // binomial sd at colourable_upper
  GadgetProbability exact;
  bool bad_within_3sigma = false;
  bool colourable_below_upper = false;  // p_colourable_hat <= colourable_upper + 3 sigma
};

inline GadgetReport gadget_experiment(const GadgetInstance& inst, std::uint32_t k, std::uint32_t m,
                                      std::uint64_t trials, std::uint64_t seed, const ExperimentOptions& options = {}) {
  detail::require(trials >= 1, "trials must be >= 1");
  detail::require(k == inst.k(), "k must match the planted list size");
  detail::require(k <= m, "need k <= m");
  struct Outcome {
    bool bad = false;
    detail::TrialStatus status = detail::TrialStatus::NotColourable;
  };
  std::vector<Outcome> outcomes(trials);
  run_trials(trials, options.workers, [&](std::uint64_t t) {
    const ListAssignment l = sample_assignment(inst.graph.order(), k, m, Seed{seed, t});
    outcomes[t].bad = has_bad_copy(inst, l);
    try {
      outcomes[t].status = is_colourable(inst.graph, l, options.solver).colourable ? detail::TrialStatus::Colourable
                                                                                   : detail::TrialStatus::NotColourable;
    } catch (const CapExceeded&) {
      outcomes[t].status = detail::TrialStatus::CapExceeded;
    }
  });
  GadgetReport r;
  r.k = k;
  r.m = m;
  r.trials = trials;
  r.seed = seed;
  for (const auto& o : outcomes) {
    r.bad += o.bad;
    r.colourable += o.status == detail::TrialStatus::Colourable;
    r.errors += o.status == detail::TrialStatus::CapExceeded;
    r.bad_but_colourable += o.bad && o.status == detail::TrialStatus::Colourable;
  }
  r.exact = gadget_probability(inst.n, inst.delta, k, m, inst.d, inst.g0.order());
  const double t = static_cast<double>(trials);
  const std::uint64_t valid = trials - r.errors;
  r.p_bad_hat = static_cast<double>(r.bad) / t;
  r.p_colourable_hat = valid == 0 ? 0.0 : static_cast<double>(r.colourable) / static_cast<double>(valid);
  const double pb = r.exact.p_bad();
  const double pc = r.exact.colourable();
  r.sigma_bad = std::sqrt(pb * (1 - pb) / t);
  r.sigma_colourable = std::sqrt(pc * (1 - pc) / std::max<double>(static_cast<double>(valid), 1));
  r.bad_within_3sigma = std::abs(r.p_bad_hat - pb) <= 3 * r.sigma_bad;
  r.colourable_below_upper = r.p_colourable_hat <= pc + 3 * r.sigma_colourable;
  return r;
}

}  // namespace rlc
