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


#include "wsat/experiment.hpp"

#include <atomic>
#include <chrono>
#include <charconv>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>

#include "wsat/clique.hpp"
#include "wsat/errors.hpp"
#include "wsat/family.hpp"

namespace wsat {
namespace {

using TrialFn = std::function<void(const Graph&, TrialRecord&)>;

// Runs every (p, trial) pair; records land at their own index so the output
// order does not depend on the worker count.
std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg, const TrialFn& fn) {
  const std::size_t total = cfg.p_grid.size() * cfg.trials;
  std::vector<TrialRecord> records(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      TrialRecord& r = records[i];
      r.p_index = i / cfg.trials;
      r.trial = i % cfg.trials;
      r.p = cfg.p_grid[r.p_index];
      const Seed seed = trial_seed(cfg.master_seed, r.p_index, r.trial);
      r.seed = derive_seed(seed);
      try {
        const auto start = std::chrono::steady_clock::now();
        const Graph g = sample_gnp(cfg.n, r.p, seed);
        r.edges = g.size();
        fn(g, r);
        if (cfg.record_timings)
          r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t workers = std::min(cfg.workers, std::max<std::size_t>(total, 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

SolveOptions trial_options(const ExperimentConfig& cfg) {
  SolveOptions o;
  o.budget = cfg.budget;
  o.greedy_repeats = cfg.greedy_repeats;
  o.greedy_seed = Seed{cfg.master_seed, 0x5eed};
  // parallelism lives at the trial level
  o.workers = 1;
  return o;
}

void fill_wsat(TrialRecord& r, const WsatResult& w) {
  r.wsat_lower = w.lower;
  r.wsat_upper = w.upper;
  r.status = w.status;
  if (w.exact) r.wsat_exact = *w.exact;
}

ExperimentReport make_report(const ExperimentConfig& cfg, ExperimentMode mode) {
  validate(cfg);
  ExperimentReport rep;
  rep.mode = mode;
  rep.n = cfg.n;
  rep.master_seed = cfg.master_seed;
  rep.p_grid = cfg.p_grid;
  return rep;
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

template <class T>
std::string opt(const std::optional<T>& x) {
  if (!x) return "";
  if constexpr (std::is_same_v<T, bool>) return *x ? "true" : "false";
  else return std::to_string(*x);
}

}  // namespace

std::string_view to_string(ExperimentMode m) {
  switch (m) {
    case ExperimentMode::stability: return "stability";
    case ExperimentMode::sandwich: return "sandwich";
    case ExperimentMode::neighborhood: return "neighborhood";
    case ExperimentMode::scan: return "scan";
  }
  return "?";
}

std::optional<ExperimentMode> parse_experiment_mode(std::string_view name) {
  for (auto m : {ExperimentMode::stability, ExperimentMode::sandwich, ExperimentMode::neighborhood,
                 ExperimentMode::scan})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.trials == 0) throw ParameterError("trials must be at least 1");
  if (cfg.workers == 0) throw ParameterError("workers must be at least 1");
  if (cfg.subset_k == 0) throw ParameterError("subset size must be at least 1");
  if (cfg.p_grid.empty()) throw ParameterError("probability grid is empty");
  for (std::size_t i = 0; i < cfg.p_grid.size(); ++i) {
    const double p = cfg.p_grid[i];
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("probability outside [0,1]: " + format_double(p));
    if (i > 0 && !(cfg.p_grid[i - 1] < p)) throw ParameterError("probability grid must be strictly increasing");
  }
}

Seed trial_seed(std::uint64_t master, std::size_t p_index, std::size_t trial) {
  return Seed{master, (static_cast<std::uint64_t>(p_index) << 32) | static_cast<std::uint64_t>(trial)};
}

std::vector<PAggregate> aggregate(ExperimentMode mode, const std::vector<double>& p_grid,
                                  const std::vector<TrialRecord>& records) {
  std::vector<PAggregate> out(p_grid.size());
  std::vector<std::size_t> equal(p_grid.size()), contains(p_grid.size()), nb(p_grid.size()),
      nb_clique(p_grid.size());
  std::vector<double> large(p_grid.size()), clique(p_grid.size());
  for (std::size_t i = 0; i < p_grid.size(); ++i) out[i].p = p_grid[i];
  for (const TrialRecord& r : records) {
    PAggregate& a = out.at(r.p_index);
    ++a.trials;
    a.mean_edges += static_cast<double>(r.edges);
    a.mean_x_f += static_cast<double>(r.x_f);
    if (r.edges > 0) a.mean_ratio += static_cast<double>(r.x_f) / static_cast<double>(r.edges);
    if (r.status == SolveStatus::budget_exceeded) ++a.budget_exceeded;
    if (r.equal_to_complete && *r.equal_to_complete) ++equal[r.p_index];
    if (r.x_f > 0) ++contains[r.p_index];
    if (r.neighborhood) {
      ++nb[r.p_index];
      large[r.p_index] += r.neighborhood->fraction_large;
      if (r.neighborhood->fraction_clique) {
        ++nb_clique[r.p_index];
        clique[r.p_index] += *r.neighborhood->fraction_clique;
      }
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    PAggregate& a = out[i];
    if (a.trials == 0) continue;
    const double t = static_cast<double>(a.trials);
    a.mean_edges /= t;
    a.mean_x_f /= t;
    a.mean_ratio /= t;
    const std::size_t counted = a.trials - a.budget_exceeded;
    if (mode == ExperimentMode::stability && counted > 0)
      a.fraction_equal = static_cast<double>(equal[i]) / static_cast<double>(counted);
    if (mode == ExperimentMode::scan) a.fraction_contains = static_cast<double>(contains[i]) / t;
    if (nb[i] > 0) a.mean_fraction_large = large[i] / static_cast<double>(nb[i]);
    if (nb_clique[i] > 0) a.mean_fraction_clique = clique[i] / static_cast<double>(nb_clique[i]);
  }
  return out;
}

ExperimentReport stability_experiment(const ExperimentConfig& cfg) {
  ExperimentReport rep = make_report(cfg, ExperimentMode::stability);
  const SolveOptions opts = trial_options(cfg);
  const WsatResult complete = wsat_exact(build_named_graph(GraphFamily::complete(cfg.n)), cfg.f, opts);
  if (complete.exact) rep.complete_wsat = *complete.exact;

  rep.records = run_trials(cfg, [&](const Graph& g, TrialRecord& r) {
    r.x_f = count_copies(g, cfg.f);
    const WsatResult w = wsat_exact(g, cfg.f, opts);
    fill_wsat(r, w);
    if (w.exact && rep.complete_wsat) r.equal_to_complete = *w.exact == *rep.complete_wsat;
    else r.status = SolveStatus::budget_exceeded;
  });
  rep.aggregates = aggregate(rep.mode, rep.p_grid, rep.records);
  return rep;
}

ExperimentReport sandwich_check(const ExperimentConfig& cfg) {
  ExperimentReport rep = make_report(cfg, ExperimentMode::sandwich);
  const SolveOptions opts = trial_options(cfg);
  rep.records = run_trials(cfg, [&](const Graph& g, TrialRecord& r) {
    r.x_f = count_copies(g, cfg.f);
    const WsatResult w = wsat_exact(g, cfg.f, opts);
    fill_wsat(r, w);
    const auto e = static_cast<std::int64_t>(r.edges);
    const auto floor_value = e - static_cast<std::int64_t>(r.x_f);
    // bounds hold even when the search budget ran out
    const std::int64_t lo = w.exact ? *w.exact : w.lower;
    const std::int64_t hi = w.exact ? *w.exact : w.upper;
    if (hi > e || (w.exact && lo < floor_value))
      throw SandwichViolation("sandwich violated at p=" + format_double(r.p) + " trial " +
                              std::to_string(r.trial) + ": |E|=" + std::to_string(e) +
                              " X_F=" + std::to_string(r.x_f) + " wsat=" + std::to_string(lo));
  });
  rep.aggregates = aggregate(rep.mode, rep.p_grid, rep.records);
  return rep;
}

ExperimentReport neighborhood_experiment(const ExperimentConfig& cfg) {
  ExperimentReport rep = make_report(cfg, ExperimentMode::neighborhood);
  rep.records = run_trials(cfg, [&](const Graph& g, TrialRecord& r) {
    r.x_f = count_copies(g, cfg.f);
    r.neighborhood = neighborhood_property_check(g, cfg.f, cfg.subset_k, r.p, cfg.sample_cap,
                                                 Seed{r.seed, 1});
  });
  rep.aggregates = aggregate(rep.mode, rep.p_grid, rep.records);
  return rep;
}

ExperimentReport threshold_scan(const ExperimentConfig& cfg) {
  ExperimentReport rep = make_report(cfg, ExperimentMode::scan);
  const double n = static_cast<double>(cfg.n);
  rep.marker_m = std::pow(n, -1.0 / cfg.f.m().to_double());
  rep.marker_mu = std::pow(n, -1.0 / cfg.f.mu().to_double());
  rep.records = run_trials(cfg, [&](const Graph& g, TrialRecord& r) { r.x_f = count_copies(g, cfg.f); });
  rep.aggregates = aggregate(rep.mode, rep.p_grid, rep.records);
  return rep;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.mode) {
    case ExperimentMode::stability: return stability_experiment(cfg);
    case ExperimentMode::sandwich: return sandwich_check(cfg);
    case ExperimentMode::neighborhood: return neighborhood_experiment(cfg);
    case ExperimentMode::scan: return threshold_scan(cfg);
  }
  throw ParameterError("unknown experiment mode");
}

NeighborhoodReport neighborhood_property_check(const Graph& g, const Pattern& f, std::size_t k, double p,
                                               std::size_t sample_cap, Seed seed) {
  if (k == 0) throw ParameterError("subset size must be at least 1");
  const std::size_t n = g.order();
  NeighborhoodReport rep;
  rep.k = k;
  rep.threshold = std::pow(p, static_cast<double>(k)) * static_cast<double>(n) / 2.0;
  if (k > n) return rep;

  // C(n,k) saturating at 2^64-1
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total = total * (n - i) / (i + 1);
    if (total > UINT64_MAX) {
      total = UINT64_MAX;
      break;
    }
  }
  rep.total_subsets = static_cast<std::uint64_t>(total);
  const bool clique_check = k == 2;
  const std::size_t clique_size = f.s() >= 2 ? f.s() - 2 : 0;
  std::uint64_t large = 0, with_clique = 0;

  auto visit = [&](const std::vector<Vertex>& xs) {
    const Bitset common = common_neighbours(g, xs);
    if (static_cast<double>(common.count()) >= rep.threshold) ++large;
    if (clique_check && find_clique(g, clique_size, &common)) ++with_clique;
    ++rep.checked;
  };

  std::vector<Vertex> xs(k);
  if (sample_cap == 0 || rep.total_subsets <= sample_cap) {
    for (std::size_t i = 0; i < k; ++i) xs[i] = static_cast<Vertex>(i);
    for (;;) {
      visit(xs);
      std::size_t i = k;
      while (i > 0 && xs[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++xs[i - 1];
      for (std::size_t j = i; j < k; ++j) xs[j] = xs[j - 1] + 1;
    }
  } else {
    rep.sampled = true;
    Rng rng(seed);
    std::vector<Vertex> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i);
    for (std::size_t s = 0; s < sample_cap; ++s) {
      // partial Fisher-Yates draws a uniform k-subset
      for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
      xs.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(xs.begin(), xs.end());
      visit(xs);
    }
  }
  rep.fraction_large = static_cast<double>(large) / static_cast<double>(rep.checked);
  if (clique_check) rep.fraction_clique = static_cast<double>(with_clique) / static_cast<double>(rep.checked);
  return rep;
}

double expected_copies(std::size_t n, double p, const Pattern& f) {
  const std::size_t s = f.s();
  if (n < s) return 0.0;
  // s!/|Aut| * C(n,s) = n(n-1)...(n-s+1) / |Aut|
  double falling = 1.0;
  for (std::size_t i = 0; i < s; ++i) falling *= static_cast<double>(n - i);
  return falling / static_cast<double>(f.aut()) * std::pow(p, static_cast<double>(f.t()));
}

std::string to_csv(const ExperimentReport& report) {
  std::string out = "p,trial,seed,edges,x_f,wsat_lower,wsat_exact,wsat_upper,equal_to_complete,status\n";
  for (const TrialRecord& r : report.records) {
    out += format_double(r.p) + "," + std::to_string(r.trial) + "," + std::to_string(r.seed) + "," +
           std::to_string(r.edges) + "," + std::to_string(r.x_f) + "," + opt(r.wsat_lower) + "," +
           opt(r.wsat_exact) + "," + opt(r.wsat_upper) + "," + opt(r.equal_to_complete) + "," +
           std::string(to_string(r.status)) + "\n";
  }
  return out;
}

}  // namespace wsat
