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


// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit when any
// criterion fails. Every tolerance and baseline is a constant below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wsat/bootstrap.hpp"
#include "wsat/constructions.hpp"
#include "wsat/experiment.hpp"
#include "wsat/family.hpp"
#include "wsat/formulas.hpp"
#include "wsat/json_io.hpp"
#include "wsat/random.hpp"
#include "wsat/solver.hpp"

namespace {

using namespace wsat;
using Clock = std::chrono::steady_clock;

constexpr double kFormulaSeconds = 120.0;
constexpr double kConstructionSeconds = 60.0;
constexpr double kCountingSeconds = 30.0;
constexpr double kProfileSeconds = 300.0;
constexpr double kStandardErrors = 5.0;
constexpr std::size_t kClosureInstances = 200;
constexpr std::size_t kScanOrders = 5;
constexpr std::size_t kBoundHosts = 100;
constexpr std::uint64_t kMasterSeed = 20260419;

constexpr std::size_t kStabilityN = 7;
constexpr double kStabilityP = 0.95;
constexpr std::size_t kStabilityTrials = 30;
constexpr double kStabilityFloor = 0.5;
// Captured on the first run with kMasterSeed; must reproduce exactly.
constexpr double kStabilityBaseline = 1.0;

Pattern named(GraphFamily fam) { return normalize_pattern(build_named_graph(fam)); }
Graph kn(std::size_t n) { return build_named_graph(GraphFamily::complete(n)); }

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.ok) ++failures;
  std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
              seconds_since(start));
  std::fflush(stdout);
}

Outcome formula_reproduction() {
  struct Row {
    std::size_t n;
    GraphFamily f;
    FormulaQuery q;
    std::int64_t value;
  };
  const std::vector<Row> rows{
      {4, GraphFamily::complete(3), {FormulaFamily::ks, 4, 3, 0}, 3},
      {5, GraphFamily::complete(3), {FormulaFamily::ks, 5, 3, 0}, 4},
      {6, GraphFamily::complete(3), {FormulaFamily::ks, 6, 3, 0}, 5},
      {5, GraphFamily::complete(4), {FormulaFamily::ks, 5, 4, 0}, 7},
      {6, GraphFamily::complete(4), {FormulaFamily::ks, 6, 4, 0}, 9},
      {5, GraphFamily::star(3), {FormulaFamily::k1t, 5, 1, 3}, 3},
      {6, GraphFamily::star(3), {FormulaFamily::k1t, 6, 1, 3}, 3},
      {5, GraphFamily::complete_bipartite(2, 3), {FormulaFamily::k2t, 5, 2, 3}, 6},
      {6, GraphFamily::complete_bipartite(2, 2), {FormulaFamily::ktt, 6, 2, 2}, 6},
  };
  const auto start = Clock::now();
  std::string bad;
  for (const Row& r : rows) {
    const WsatResult w = wsat_exact(kn(r.n), named(r.f));
    const FormulaValue v = closed_form_wsat(r.q);
    if (!w.exact || *w.exact != r.value || !v.exact() || v.lower != r.value)
      bad += " " + to_string(r.f) + "@n=" + std::to_string(r.n);
  }
  const double t = seconds_since(start);
  return {bad.empty() && t < kFormulaSeconds,
          bad.empty() ? "9/9 exact values match closed forms" : "mismatch:" + bad};
}

Outcome construction_soundness() {
  const auto start = Clock::now();
  std::size_t built = 0, passed = 0;
  for (std::size_t s : {3U, 4U}) {
    const Pattern f = named(GraphFamily::complete(s));
    const Graph core = wsat_exact(kn(s), f).certificate->h;
    for (std::size_t n = s; n <= 30; ++n) {
      ++built;
      const Construction c = construct_complete_host_saturator(n, f, s, core);
      const auto want = static_cast<std::int64_t>((s - 2) * n) - oracle::binom(static_cast<std::int64_t>(s) - 1, 2);
      if (static_cast<std::int64_t>(c.h.size()) == want && is_weakly_saturated(kn(n), f, c.h)) ++passed;
    }
  }
  const double t = seconds_since(start);
  return {passed == built && t < kConstructionSeconds,
          std::to_string(passed) + "/" + std::to_string(built) + " constructions verified"};
}

Outcome closure_algebra() {
  const std::vector<Pattern> patterns{named(GraphFamily::complete(3)), named(GraphFamily::cycle(4)),
                                      named(GraphFamily::path(4)),     named(GraphFamily::star(3)),
                                      named(GraphFamily::complete(4)), named(GraphFamily::matching(2)),
                                      named(GraphFamily::path(5)),     named(GraphFamily::complete_bipartite(2, 3))};
  std::size_t violations = 0;
  for (std::size_t i = 0; i < kClosureInstances; ++i) {
    const Pattern& f = patterns[i % patterns.size()];
    Rng rng({kMasterSeed, 3000 + i});
    const std::size_t n = 4 + rng.below(5);
    const Graph host = sample_gnp(n, 0.5 + 0.5 * rng.uniform(), {kMasterSeed, 4000 + i});
    Graph small(n), big(n);
    for (const Edge& e : host.edges()) {
      const double u = rng.uniform();
      if (u < 0.3) small.add_edge(e);
      if (u < 0.55) big.add_edge(e);
    }
    const Graph expect = oracle::closure(host, f.graph(), small);
    const Graph c = closure(host, f, small).closure;
    if (c != expect) ++violations;
    if (closure(host, f, c).closure != c) ++violations;
    if (!c.is_spanning_subgraph_of(closure(host, f, big).closure)) ++violations;
    for (std::uint64_t order = 0; order < kScanOrders; ++order) {
      const ClosureResult r = closure(host, f, small, {.record_trace = true, .scan_seed = order});
      if (r.closure != expect || !verify_trace(host, f, small, r.trace)) ++violations;
    }
  }
  return {violations == 0, std::to_string(kClosureInstances) + " instances, " + std::to_string(violations) +
                               " violations"};
}

Outcome bound_consistency() {
  std::size_t violations = 0, complete_checks = 0;
  const std::vector<Pattern> patterns{named(GraphFamily::complete(3)), named(GraphFamily::cycle(4)),
                                      named(GraphFamily::path(4)), named(GraphFamily::star(3)),
                                      named(GraphFamily::complete(4))};
  // complete hosts: general lower bound <= exact <= (delta-1)n + (s-1)(s-2 delta)/2
  for (const Pattern& f : patterns) {
    for (std::size_t n = f.s(); n <= 7; ++n) {
      const WsatResult w = wsat_exact(kn(n), f);
      if (!w.exact) continue;
      ++complete_checks;
      const auto ni = static_cast<std::int64_t>(n);
      if (lower_bound_general(kn(n), f) > *w.exact) ++violations;
      if (complete_host_lower_bound(ni, f) > *w.exact) ++violations;
      if (*w.exact > upper_bound_from_small_core(ni, f)) ++violations;
    }
  }
  // random hosts: general lower bound, greedy upper bound, copy-count sandwich
  std::size_t hosts = 0;
  for (std::size_t i = 0; hosts < kBoundHosts; ++i) {
    const Pattern& f = patterns[i % 4];
    Rng rng({kMasterSeed, 5000 + i});
    const std::size_t n = 4 + rng.below(4);
    const Graph g = sample_gnp(n, 0.3 + 0.65 * rng.uniform(), {kMasterSeed, 6000 + i});
    const WsatResult w = wsat_exact(g, f);
    if (!w.exact) continue;
    ++hosts;
    const auto e = static_cast<std::int64_t>(g.size());
    const auto x = static_cast<std::int64_t>(count_copies(g, f));
    if (n >= f.s() && lower_bound_general(g, f) > *w.exact) ++violations;
    if (*w.exact > greedy_upper_bound(g, f, {kMasterSeed, i}).upper) ++violations;
    if (e - x > *w.exact || *w.exact > e) ++violations;
  }
  return {violations == 0, std::to_string(complete_checks) + " complete hosts, " + std::to_string(hosts) +
                               " random hosts, " + std::to_string(violations) + " violations"};
}

Outcome counting_cross_check() {
  const auto start = Clock::now();
  const Pattern k3 = named(GraphFamily::complete(3));
  const std::uint64_t k6 = count_copies(kn(6), k3);
  ExperimentConfig cfg(k3);
  cfg.mode = ExperimentMode::scan;
  cfg.n = 10;
  cfg.p_grid = {0.3};
  cfg.trials = 200;
  cfg.master_seed = kMasterSeed;
  const ExperimentReport rep = threshold_scan(cfg);
  double sum = 0, sq = 0;
  for (const auto& r : rep.records) {
    sum += static_cast<double>(r.x_f);
    sq += static_cast<double>(r.x_f) * static_cast<double>(r.x_f);
  }
  const double m = static_cast<double>(rep.records.size());
  const double mean = sum / m;
  const double se = std::sqrt((sq - m * mean * mean) / (m - 1) / m);
  const double expect = expected_copies(10, 0.3, k3);
  const double z = std::abs(mean - expect) / se;
  const double t = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf, "copies(K_6,K_3)=%llu, mean X_F=%.4f vs E=%.4f, %.2f standard errors",
                static_cast<unsigned long long>(k6), mean, expect, z);
  return {k6 == 20 && z <= kStandardErrors && t < kCountingSeconds, buf};
}

Outcome stability_frequency() {
  ExperimentConfig cfg(named(GraphFamily::complete(3)));
  cfg.mode = ExperimentMode::stability;
  cfg.n = kStabilityN;
  cfg.p_grid = {kStabilityP, 1.0};
  cfg.trials = kStabilityTrials;
  cfg.master_seed = kMasterSeed;
  const ExperimentReport a = stability_experiment(cfg);
  const ExperimentReport b = stability_experiment(cfg);
  const bool identical = io::experiment_to_json(a).dump() == io::experiment_to_json(b).dump();
  const auto& agg = a.aggregates;
  const double frac = agg[0].fraction_equal.value_or(-1.0);
  const double at_one = agg[1].fraction_equal.value_or(-1.0);
  const bool baseline_ok = frac == kStabilityBaseline;
  char buf[200];
  std::snprintf(buf, sizeof buf, "fraction %.17g at p=%.2f (baseline %.17g), %.17g at p=1, reruns %s", frac,
                kStabilityP, kStabilityBaseline, at_one, identical ? "identical" : "differ");
  return {identical && baseline_ok && frac >= kStabilityFloor && at_one == 1.0, buf};
}

Outcome profile_detection() {
  const auto start = Clock::now();
  struct Row {
    std::string name;
    GraphFamily f;
    std::size_t n_max;
    std::int64_t d_f;
    std::size_t k;
  };
  const std::vector<Row> rows{{"K_3", GraphFamily::complete(3), 8, -1, 3},
                              {"K_4", GraphFamily::complete(4), 7, -3, 4},
                              {"K_{1,3}", GraphFamily::star(3), 8, 3, 3}};
  bool ok = true;
  std::string detail;
  for (const Row& r : rows) {
    const StabilityProfile p = stability_profile(named(r.f), r.n_max);
    const bool row_ok = p.complete && p.non_increasing && p.d_f == r.d_f && p.k == r.k;
    ok = ok && row_ok;
    detail += r.name + " (d_F,k)=(" + (p.d_f ? std::to_string(*p.d_f) : "?") + "," +
              (p.k ? std::to_string(*p.k) : "?") + ") expected (" + std::to_string(r.d_f) + "," +
              std::to_string(r.k) + ") phi from n=" + std::to_string(p.phi_table.front().n) +
              (p.non_increasing ? " non-increasing" : " increasing") + (row_ok ? "; " : " MISMATCH; ");
  }
  return {ok && seconds_since(start) < kProfileSeconds, detail};
}

}  // namespace

int main() {
  report(1, "formula reproduction", formula_reproduction);
  report(2, "construction soundness", construction_soundness);
  report(3, "closure algebra", closure_algebra);
  report(4, "bound consistency", bound_consistency);
  report(5, "counting cross-check", counting_cross_check);
  report(6, "stability frequency", stability_frequency);
  report(7, "profile detection", profile_detection);
  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
