// Copyright 2026 The wsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string_view>
#include <vector>

#include "wsat/codec.hpp"
#include "wsat/constructions.hpp"
#include "wsat/errors.hpp"
#include "wsat/experiment.hpp"
#include "wsat/family.hpp"
#include "wsat/formulas.hpp"
#include "wsat/json_io.hpp"
#include "wsat/pattern.hpp"
#include "wsat/solver.hpp"

namespace wsat::cli {
namespace {

using io::json;

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = s.find(sep, start);
    out.emplace_back(s.substr(start, at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

std::size_t parse_count(const std::string& text, const std::string& spec) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw ParameterError("bad integer '" + text + "' in graph spec '" + spec + "'");
  return value;
}

double parse_real(const std::string& text, const std::string& context) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw ParameterError("bad number '" + text + "' in " + context);
  return value;
}

struct Globals {
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  bool pretty = false;
  std::string out_path;
};

struct BudgetFlags {
  std::uint64_t nodes = SearchBudget{}.max_nodes;
  double seconds = SearchBudget{}.max_seconds;
  std::size_t greedy_repeats = 1;

  void add_to(CLI::App* app) {
    app->add_option("--budget-nodes", nodes, "search node budget")->capture_default_str();
    app->add_option("--budget-seconds", seconds, "search wall-clock budget")->capture_default_str();
    app->add_option("--greedy-repeats", greedy_repeats, "reverse-delete runs for the initial upper bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  SolveOptions options(const Globals& g) const {
    SolveOptions o;
    o.budget = SearchBudget{nodes, seconds};
    o.workers = g.workers;
    o.greedy_seed = Seed{g.seed, 0};
    o.greedy_repeats = greedy_repeats;
    return o;
  }
};

Pattern parse_pattern(const std::string& spec, const Globals& g) {
  return normalize_pattern(parse_graph_spec(spec, Seed{g.seed, 2}));
}

void emit(const json& j, const Globals& g, std::ostream& out) {
  const std::string text = j.dump(g.pretty ? 2 : -1) + "\n";
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary);
  if (!file) throw ParameterError("cannot write " + g.out_path);
  file << text;
}

std::string opt_str(const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : "none"; }

}  // namespace

Graph parse_graph_spec(const std::string& spec, Seed seed) {
  const std::size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::vector<std::string> args = split(std::string_view(spec).substr(colon + 1), ',');
    auto want = [&](std::size_t k) {
      if (args.size() != k)
        throw ParameterError("graph spec '" + spec + "' needs " + std::to_string(k) + " parameter(s)");
    };
    auto one = [&](auto factory) {
      want(1);
      return build_named_graph(factory(parse_count(args[0], spec)));
    };
    if (kind == "complete") return one(GraphFamily::complete);
    if (kind == "star") return one(GraphFamily::star);
    if (kind == "path") return one(GraphFamily::path);
    if (kind == "cycle") return one(GraphFamily::cycle);
    if (kind == "empty") return one(GraphFamily::empty);
    if (kind == "matching") return one(GraphFamily::matching);
    if (kind == "cbip") {
      want(2);
      return build_named_graph(GraphFamily::complete_bipartite(parse_count(args[0], spec), parse_count(args[1], spec)));
    }
    if (kind == "gnp") {
      want(2);
      return sample_gnp(parse_count(args[0], spec), parse_real(args[1], "graph spec '" + spec + "'"), seed);
    }
  }
  return read_edge_list_file(spec);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak saturation toolkit: F-closures, exact and heuristic wsat(G,F), constructions and "
               "random-graph experiments.",
               "wsat"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "master seed for every randomized step (before the subcommand)")
      ->capture_default_str();
  app.add_option("--workers", g.workers, "parallel workers for search and trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--json", g.pretty, "pretty-print the JSON payload");
  app.add_option("--out", g.out_path, "write the JSON payload to FILE instead of stdout");

  std::string host_spec, pattern_spec, seed_spec, graph_spec, trace_path;
  std::optional<std::uint64_t> scan_seed;
  bool no_trace = false;

  auto* c_closure = app.add_subcommand("closure", "F-closure of a seed graph inside a host");
  c_closure->add_option("--host", host_spec, "host graph")->required();
  c_closure->add_option("--seed", seed_spec, "seed graph (spanning subgraph of the host)")->required();
  c_closure->add_option("--pattern", pattern_spec, "pattern F")->required();
  c_closure->add_option("--scan-seed", scan_seed, "shuffle the initial scan order");
  c_closure->add_flag("--no-trace", no_trace, "omit the activation trace");

  auto* c_verify = app.add_subcommand("verify", "check that a graph is weakly (host,F)-saturated");
  c_verify->add_option("--host", host_spec, "host graph")->required();
  c_verify->add_option("--graph", graph_spec, "candidate saturator H")->required();
  c_verify->add_option("--pattern", pattern_spec, "pattern F")->required();
  c_verify->add_option("--trace", trace_path, "JSON activation trace to check step by step");

  BudgetFlags budget;
  bool greedy_only = false;
  auto* c_solve = app.add_subcommand("solve", "exact wsat(G,F) with certificate");
  c_solve->add_option("--host", host_spec, "host graph")->required();
  c_solve->add_option("--pattern", pattern_spec, "pattern F")->required();
  c_solve->add_flag("--greedy-only", greedy_only, "reverse-delete upper bound only");
  budget.add_to(c_solve);

  std::string family;
  std::int64_t fn = 0, fs = 0, ft = 0;
  auto* c_formula = app.add_subcommand("formula", "closed-form wsat(n,F) for the complete host");
  c_formula->add_option("--family", family, "ks, ktt, kst, k2t or k1t")
      ->required()
      ->check(CLI::IsMember({"ks", "ktt", "kst", "k2t", "k1t"}));
  c_formula->add_option("--n", fn, "host order")->required();
  c_formula->add_option("--s", fs, "s parameter");
  c_formula->add_option("--t", ft, "t parameter");

  std::string method = "complete", core_path;
  std::size_t cn = 0;
  std::optional<std::size_t> cm;
  auto* c_construct = app.add_subcommand("construct", "build and verify a saturator");
  c_construct->add_option("--method", method, "complete, random or partition")
      ->check(CLI::IsMember({"complete", "random", "partition"}))
      ->capture_default_str();
  c_construct->add_option("--pattern", pattern_spec, "pattern F")->required();
  c_construct->add_option("--n", cn, "host order (complete)");
  c_construct->add_option("--host", host_spec, "host graph (random, partition)");
  c_construct->add_option("--m", cm, "clique size (complete, random); defaults to |V(F)|");
  c_construct->add_option("--core", core_path, "core graph on m vertices (complete)");
  budget.add_to(c_construct);

  std::size_t nmax = 0;
  auto* c_profile = app.add_subcommand("profile", "phi(n) = wsat(n,F) - (delta-1)n over the complete host");
  c_profile->add_option("--pattern", pattern_spec, "pattern F")->required();
  c_profile->add_option("--nmax", nmax, "largest n scanned")->required();
  budget.add_to(c_profile);

  std::string mode = "stability", pgrid, csv_path;
  std::size_t en = 6, trials = 1, subset_k = 2, sample_cap = 0;
  bool timings = false;
  auto* c_experiment = app.add_subcommand("experiment", "seeded G(n,p) experiments");
  c_experiment->add_option("--mode", mode, "stability, sandwich, neighborhood or scan")
      ->check(CLI::IsMember({"stability", "sandwich", "neighborhood", "scan"}))
      ->capture_default_str();
  c_experiment->add_option("--pattern", pattern_spec, "pattern F")->required();
  c_experiment->add_option("--n", en, "host order")->capture_default_str();
  c_experiment->add_option("--pgrid", pgrid, "comma-separated, strictly increasing probabilities")->required();
  c_experiment->add_option("--trials", trials, "trials per probability")->capture_default_str();
  c_experiment->add_option("--k", subset_k, "subset size (neighborhood)")->capture_default_str();
  c_experiment->add_option("--sample-cap", sample_cap, "sampled subsets per trial, 0 for all (neighborhood)")
      ->capture_default_str();
  c_experiment->add_option("--csv", csv_path, "also write one CSV row per trial to FILE");
  c_experiment->add_flag("--timings", timings, "record per-trial wall-clock seconds");
  budget.add_to(c_experiment);

  std::optional<double> count_p;
  auto* c_count = app.add_subcommand("count", "copies of F in a host");
  c_count->add_option("--host", host_spec, "host graph")->required();
  c_count->add_option("--pattern", pattern_spec, "pattern F")->required();
  c_count->add_option("--p", count_p, "also report E(X_F) in G(|V(host)|, p)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_closure->parsed()) {
      const Graph host = parse_graph_spec(host_spec, Seed{g.seed, 0});
      const Graph seed = parse_graph_spec(seed_spec, Seed{g.seed, 1});
      const Pattern f = parse_pattern(pattern_spec, g);
      const ClosureResult r = closure(host, f, seed, {.record_trace = !no_trace, .scan_seed = scan_seed});
      emit(io::closure_to_json(seed, r), g, out);
      err << "closure: added " << r.closure.size() - seed.size() << " edges, "
          << (r.percolates ? "percolates" : "does not percolate") << "\n";
    } else if (c_verify->parsed()) {
      const Graph host = parse_graph_spec(host_spec, Seed{g.seed, 0});
      const Graph h = parse_graph_spec(graph_spec, Seed{g.seed, 1});
      const Pattern f = parse_pattern(pattern_spec, g);
      const bool f_free = !contains_copy(h, f);
      const ClosureResult r = closure(host, f, h, {.record_trace = false, .scan_seed = std::nullopt});
      json j = {{"f_free", f_free},
                {"percolates", r.percolates},
                {"weakly_saturated", f_free && r.percolates},
                {"edges", h.size()},
                {"closure_edges", r.closure.size()},
                {"host_edges", host.size()}};
      if (!trace_path.empty()) {
        std::ifstream in(trace_path);
        if (!in) throw ParameterError("cannot open " + trace_path);
        json tj;
        try {
          tj = json::parse(in);
        } catch (const json::exception& e) {
          throw ParseError(0, std::string("trace file: ") + e.what());
        }
        const TraceCheck check = verify_trace(host, f, h, io::trace_from_json(tj.is_object() ? tj.at("trace") : tj));
        j["trace"] = {{"ok", check.ok},
                      {"first_failure", check.first_failure ? json(*check.first_failure) : json(nullptr)},
                      {"reason", check.reason}};
      }
      emit(j, g, out);
      err << "verify: " << (f_free && r.percolates ? "weakly saturated" : "not weakly saturated") << "\n";
    } else if (c_solve->parsed()) {
      const Graph host = parse_graph_spec(host_spec, Seed{g.seed, 0});
      const Pattern f = parse_pattern(pattern_spec, g);
      const SolveOptions o = budget.options(g);
      const WsatResult r = greedy_only ? best_greedy(host, f, o.greedy_seed, o.greedy_repeats)
                                       : wsat_exact(host, f, o);
      emit(io::wsat_to_json(r), g, out);
      err << "solve: exact " << opt_str(r.exact) << ", bounds [" << r.lower << ", " << r.upper << "], "
          << to_string(r.status) << "\n";
    } else if (c_formula->parsed()) {
      const FormulaQuery q{*parse_formula_family(family), fn, fs, ft};
      const FormulaValue v = closed_form_wsat(q);
      emit(io::formula_to_json(q, v), g, out);
      err << "formula: [" << v.lower << ", " << v.upper << "]\n";
    } else if (c_construct->parsed()) {
      const Pattern f = parse_pattern(pattern_spec, g);
      const Seed cseed{g.seed, 3};
      Construction c;
      if (method == "complete") {
        if (cn == 0) throw ParameterError("--n is required for the complete method");
        const std::size_t m = cm.value_or(f.s());
        Graph core;
        if (!core_path.empty()) {
          core = read_edge_list_file(core_path);
        } else {
          const WsatResult r = wsat_exact(build_named_graph(GraphFamily::complete(m)), f, budget.options(g));
          if (!r.certificate) throw ConstructionFailedError("no core saturator found within budget");
          core = r.certificate->h;
        }
        c = construct_complete_host_saturator(cn, f, m, core);
      } else {
        if (host_spec.empty()) throw ParameterError("--host is required for the " + method + " method");
        const Graph host = parse_graph_spec(host_spec, Seed{g.seed, 0});
        c = method == "random" ? construct_random_host_saturator(host, f, cm.value_or(f.s()), cseed)
                               : construct_clique_partition_saturator(host, f, cseed);
      }
      emit(io::construction_to_json(c), g, out);
      err << "construct: " << c.h.size() << " edges, verified\n";
    } else if (c_profile->parsed()) {
      const Pattern f = parse_pattern(pattern_spec, g);
      const StabilityProfile p = stability_profile(f, nmax, budget.options(g));
      emit(io::profile_to_json(p), g, out);
      err << "profile: d_F " << opt_str(p.d_f) << ", k "
          << (p.k ? std::to_string(*p.k) : std::string("none")) << "\n";
    } else if (c_experiment->parsed()) {
      ExperimentConfig cfg(parse_pattern(pattern_spec, g));
      cfg.n = en;
      for (const std::string& x : split(pgrid, ',')) cfg.p_grid.push_back(parse_real(x, "--pgrid"));
      cfg.trials = trials;
      cfg.master_seed = g.seed;
      cfg.mode = *parse_experiment_mode(mode);
      cfg.workers = g.workers;
      cfg.budget = SearchBudget{budget.nodes, budget.seconds};
      cfg.greedy_repeats = budget.greedy_repeats;
      cfg.subset_k = subset_k;
      cfg.sample_cap = sample_cap;
      cfg.record_timings = timings;
      const ExperimentReport rep = run_experiment(cfg);
      if (!csv_path.empty()) {
        std::ofstream file(csv_path, std::ios::binary);
        if (!file) throw ParameterError("cannot write " + csv_path);
        file << to_csv(rep);
      }
      emit(io::experiment_to_json(rep), g, out);
      err << "experiment: " << rep.records.size() << " trials over " << rep.p_grid.size() << " probabilities\n";
    } else if (c_count->parsed()) {
      const Graph host = parse_graph_spec(host_spec, Seed{g.seed, 0});
      const Pattern f = parse_pattern(pattern_spec, g);
      json j = {{"copies", count_copies(host, f)},
                {"injective_maps", count_injective_maps(host, f)},
                {"aut", f.aut()},
                {"s", f.s()},
                {"t", f.t()},
                {"delta", f.delta()},
                {"m", f.m().str()},
                {"mu", f.mu().str()}};
      if (count_p) j["expected_copies"] = expected_copies(host.order(), *count_p, f);
      emit(j, g, out);
      err << "count: " << j["copies"].get<std::uint64_t>() << " copies\n";
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace wsat::cli
