// rlc: command-line front end for random list colouring experiments.
//
// Exit codes: 0 success, 1 usage error, 2 input parse error, 3 solver cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rlc/rlc.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kCap = 3;

struct Common {
  std::string graph;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint32_t exact_cap = 64;
  std::string out;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw rlc::ParseError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const std::string& path, const rlc::json& j) { Output(path).stream() << j.dump(2) << '\n'; }

// Injects values from a JSON config object as --key value pairs, skipping
// keys already given on the command line (flags override the config).
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw rlc::ParseError("cannot open config file " + path);
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::exception& e) {
    throw rlc::ParseError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!config.is_object()) throw rlc::ParseError("config file must hold a JSON object");
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  for (const auto& [key, value] : config.items()) {
    if (key == "config" || given(key)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
    } else if (value.is_array()) {
      for (const auto& item : value) {
        args.push_back("--" + key);
        args.push_back(item.is_string() ? item.get<std::string>() : item.dump());
      }
    } else {
      args.push_back("--" + key);
      args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
  }
  return args;
}

rlc::ListAssignment load_lists(const std::string& path, std::uint32_t m) {
  std::ifstream in(path);
  if (!in) throw rlc::ParseError("cannot open list file " + path);
  return rlc::read_assignment(in, m);
}

void add_graph(CLI::App* app, Common& c) {
  app->add_option("--graph,-g", c.graph, "graph spec (cyclepow:n:r, cliques:n:delta, multipartite:s:r, file:<path>, "
                                          "gadget:<path>, g6:<code>, complete:n, cycle:n, path:n, petersen)")
      ->required();
}

void add_sampling(CLI::App* app, Common& c, bool seed_required) {
  app->add_option("--k", c.k, "list size")->required()->check(CLI::PositiveNumber);
  app->add_option("--m", c.m, "palette size")->required()->check(CLI::PositiveNumber);
  auto* seed = app->add_option("--seed", c.seed, "master seed");
  if (seed_required) seed->required();
}

void add_trials(CLI::App* app, Common& c) {
  app->add_option("--trials", c.trials, "number of trials")->check(CLI::PositiveNumber);
  app->add_option("--workers", c.workers, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random list colouring: sampling, exact solving, experiments and bounds"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file of option values; command-line flags take precedence");

  Common c;
  std::uint64_t trial = 0;
  std::string lists_path;
  bool emit_witness = false;
  std::vector<std::uint32_t> m_values;
  std::optional<double> g_value;
  bool sweep_json = false;
  std::optional<std::uint32_t> choose_k;
  std::uint32_t choose_cap = 8;
  std::vector<std::string> forbid;
  std::string stream_path = "-";
  std::string bound_id;
  std::vector<std::string> bound_params;
  bool list_bounds = false;

  auto* sample = app.add_subcommand("sample", "sample a random (k,m)-list-assignment");
  add_graph(sample, c);
  add_sampling(sample, c, true);
  sample->add_option("--trial", trial, "trial index (stream) of the seed");
  sample->add_option("--out,-o", c.out, "output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "decide L-colourability of a graph");
  add_graph(solve, c);
  solve->add_option("--lists", lists_path, "list file (lines 'v: c1 ... ck'); otherwise lists are sampled");
  solve->add_option("--k", c.k, "list size when sampling");
  solve->add_option("--m", c.m, "palette size");
  solve->add_option("--seed", c.seed, "master seed when sampling");
  solve->add_option("--trial", trial, "trial index when sampling");
  solve->add_flag("--emit-witness", emit_witness, "extract and validate a minimal non-colourable set");
  solve->add_option("--exact-cap", c.exact_cap, "largest component handed to backtracking");
  solve->add_option("--out,-o", c.out, "output file (default stdout)");

  auto* components = app.add_subcommand("components", "distribution of the largest dangerous component");
  add_graph(components, c);
  add_sampling(components, c, true);
  add_trials(components, c);
  components->add_option("--out,-o", c.out, "output file (default stdout)");

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of P(colourable), CSV");
  add_graph(mc, c);
  add_sampling(mc, c, true);
  add_trials(mc, c);
  mc->add_option("--exact-cap", c.exact_cap, "largest component handed to backtracking");
  mc->add_option("--out,-o", c.out, "output file (default stdout)");

  auto* sw = app.add_subcommand("sweep", "Monte Carlo estimates over several palette sizes, CSV");
  add_graph(sw, c);
  sw->add_option("--k", c.k, "list size")->required()->check(CLI::PositiveNumber);
  sw->add_option("--m-values", m_values, "ascending palette sizes")->required()->delimiter(',');
  sw->add_option("--seed", c.seed, "master seed")->required();
  add_trials(sw, c);
  sw->add_option("--gvalue", g_value, "g(H,k) for the H-free threshold (JSON output only)");
  sw->add_flag("--json", sweep_json, "print rows and thresholds as JSON instead of CSV");
  sw->add_option("--exact-cap", c.exact_cap, "largest component handed to backtracking");
  sw->add_option("--out,-o", c.out, "output file (default stdout)");

  auto* gadget = app.add_subcommand("gadget", "bad-copy and colourability estimates on a gadget");
  gadget->add_option("--graph,-g", c.graph, "gadget:<path> spec")->required();
  gadget->add_option("--k", c.k, "list size (default: planted list size)");
  gadget->add_option("--m", c.m, "palette size")->required()->check(CLI::PositiveNumber);
  gadget->add_option("--seed", c.seed, "master seed")->required();
  add_trials(gadget, c);
  gadget->add_option("--out,-o", c.out, "output file (default stdout)");

  auto* choose = app.add_subcommand("choosability", "exact k-choosability or choice number");
  add_graph(choose, c);
  choose->add_option("--k", choose_k, "list size; omit to compute the choice number");
  choose->add_option("--cap", choose_cap, "largest k-core enumerated");
  choose->add_option("--out,-o", c.out, "output file (default stdout)");

  auto* gsearch = app.add_subcommand("gsearch", "certify g(H,k) from a graph6 stream");
  gsearch->add_option("--forbid", forbid, "forbidden graph: Kt, Cl or K1,s (repeatable)");
  gsearch->add_option("--k", c.k, "list size")->required()->check(CLI::PositiveNumber);
  gsearch->add_option("--stream", stream_path, "graph6 file in non-decreasing order ('-' = stdin)");
  gsearch->add_option("--cap", choose_cap, "largest k-core enumerated");
  gsearch->add_option("--out,-o", c.out, "output file (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "evaluate a registered formula as JSON");
  bounds->add_option("--id", bound_id, "formula id");
  bounds->add_option("--param,-p", bound_params, "name=value (repeatable)");
  bounds->add_flag("--list", list_bounds, "list registered ids");
  bounds->add_option("--out,-o", c.out, "output file (default stdout)");

  std::vector<std::string> args;
  try {
    std::vector<std::string> raw(argv + 1, argv + argc);
    args = merge_config(std::move(raw));
  } catch (const rlc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes vectors from the back
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    rlc::SolverOptions solver;
    solver.exact_cap = c.exact_cap;
    rlc::ExperimentOptions experiment{c.workers, solver};

    if (*sample) {
      const auto g = rlc::resolve_graph_spec(c.graph, solver);
      const auto l = rlc::sample_assignment(g.graph.order(), c.k, c.m, rlc::Seed{c.seed, trial});
      Output(c.out).stream() << rlc::dump_assignment(l);
    } else if (*solve) {
      const auto g = rlc::resolve_graph_spec(c.graph, solver);
      rlc::ListAssignment l;
      if (!lists_path.empty()) {
        l = load_lists(lists_path, c.m);
      } else {
        if (c.k == 0 || c.m == 0) throw rlc::InvalidArgument("solve needs --lists or --k, --m and --seed");
        l = rlc::sample_assignment(g.graph.order(), c.k, c.m, rlc::Seed{c.seed, trial});
      }
      if (l.order() != g.graph.order()) throw rlc::ParseError("list file does not cover every vertex");
      const rlc::SolveResult r = rlc::is_colourable(g.graph, l, solver);
      rlc::json out = {{"graph", g.label}, {"n", g.graph.order()}, {"k", l.k()}, {"m", l.m()}};
      out["result"] = rlc::to_json(r);
      if (emit_witness && !r.colourable) {
        if (auto w = rlc::minimal_witness(g.graph, l, solver)) {
          out["witness"] = rlc::to_json(*w);
          out["witness_validation"] = rlc::to_json(rlc::validate_witness(*w, l, l.k(), solver));
        }
      }
      emit(c.out, out);
    } else if (*components) {
      const auto g = rlc::resolve_graph_spec(c.graph, solver);
      rlc::json out = rlc::to_json(rlc::component_experiment(g.graph, c.k, c.m, c.trials, c.seed, experiment));
      out["graph"] = g.label;
      emit(c.out, out);
    } else if (*mc) {
      const auto g = rlc::resolve_graph_spec(c.graph, solver);
      const auto r = rlc::mc_colourable(g.graph, c.k, c.m, c.trials, c.seed, experiment, g.label);
      rlc::write_csv(Output(c.out).stream(), {r});
    } else if (*sw) {
      const auto g = rlc::resolve_graph_spec(c.graph, solver);
      const auto r = rlc::sweep(g.graph, g.label, c.k, m_values, c.trials, c.seed, experiment, g_value);
      if (sweep_json) {
        rlc::json rows = rlc::json::array();
        for (const auto& row : r.rows) rows.push_back(rlc::to_json(row));
        rlc::json out = {{"rows", rows}};
        if (r.general) out["threshold_general"] = {{"m_growth", r.general->m_growth}, {"m_floor", r.general->m_floor}};
        if (r.hfree)
          out["threshold_hfree"] = {{"upper_growth", r.hfree->upper_growth},
                                    {"lower_growth", r.hfree->lower_growth},
                                    {"m_floor", r.hfree->m_floor}};
        emit(c.out, out);
      } else {
        rlc::write_csv(Output(c.out).stream(), r.rows);
      }
    } else if (*gadget) {
      const auto g = rlc::resolve_graph_spec(c.graph, solver);
      if (!g.gadget) throw rlc::InvalidArgument("gadget needs a gadget:<path> graph spec");
      const std::uint32_t k = c.k == 0 ? g.gadget->k() : c.k;
      rlc::json out = rlc::to_json(rlc::gadget_experiment(*g.gadget, k, c.m, c.trials, c.seed, experiment));
      out["graph"] = g.label;
      out["copies"] = g.gadget->copies;
      emit(c.out, out);
    } else if (*choose) {
      const auto g = rlc::resolve_graph_spec(c.graph, solver);
      rlc::ChoosabilityOptions options;
      options.cap = choose_cap;
      rlc::json out = {{"graph", g.label}, {"n", g.graph.order()}};
      if (choose_k) {
        out["report"] = rlc::to_json(rlc::is_k_choosable(g.graph, *choose_k, options));
      } else {
        out["chromatic_number"] = rlc::chromatic_number(g.graph, options.chromatic_cap);
        out["choice_number"] = rlc::choice_number(g.graph, options);
      }
      emit(c.out, out);
    } else if (*gsearch) {
      std::vector<rlc::ForbiddenSpec> family;
      for (const auto& f : forbid) family.push_back(rlc::ForbiddenSpec::parse(f));
      rlc::ChoosabilityOptions options;
      options.cap = choose_cap;
      std::ifstream file;
      std::istream* in = &std::cin;
      if (stream_path != "-") {
        file.open(stream_path);
        if (!file) throw rlc::ParseError("cannot open graph stream " + stream_path);
        in = &file;
      }
      rlc::Graph6Reader reader(*in);
      emit(c.out, rlc::to_json(rlc::g_search(family, c.k, reader, options)));
    } else if (*bounds) {
      if (list_bounds) {
        rlc::json ids = rlc::exact_bound_ids();
        for (const auto& e : rlc::order_registry()) ids.push_back(e.id);
        emit(c.out, ids);
        return 0;
      }
      if (bound_id.empty()) throw rlc::InvalidArgument("bounds needs --id (or --list)");
      std::map<std::string, double> params;
      for (const auto& p : bound_params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw rlc::InvalidArgument("parameter '" + p + "' is not name=value");
        try {
          std::size_t used = 0;
          const std::string text = p.substr(eq + 1);
          params[p.substr(0, eq)] = std::stod(text, &used);
          if (used != text.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
          throw rlc::ParseError("parameter '" + p + "' has a non-numeric value");
        }
      }
      emit(c.out, rlc::evaluate_bound(bound_id, params));
    }
  } catch (const rlc::ColourablePlantedLists& e) {
    std::cerr << "error: " << e.what() << "\nproof colouring: " << rlc::to_json(e.proof()).dump() << '\n';
    return kParse;
  } catch (const rlc::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const rlc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
