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


#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"
#include "wsat/random.hpp"
#include "wsat/solver.hpp"

namespace wsat {

enum class ExperimentMode { stability, sandwich, neighborhood, scan };

std::string_view to_string(ExperimentMode m);
std::optional<ExperimentMode> parse_experiment_mode(std::string_view name);

struct ExperimentConfig {
  explicit ExperimentConfig(Pattern pattern) : f(std::move(pattern)) {}

  Pattern f;
  std::size_t n = 6;
  std::vector<double> p_grid;  // strictly increasing, inside [0,1]
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  ExperimentMode mode = ExperimentMode::stability;
  std::size_t workers = 1;
  SearchBudget budget;
  std::size_t greedy_repeats = 1;
  std::size_t subset_k = 2;    // neighborhood mode
  std::size_t sample_cap = 0;  // neighborhood mode; 0 enumerates every k-subset
  bool record_timings = false;
};

// Throws ParameterError on an empty or unsorted grid, p outside [0,1],
// trials == 0, workers == 0 or subset_k == 0.
void validate(const ExperimentConfig& cfg);

// Stream (p_index << 32) | trial under the master seed.
Seed trial_seed(std::uint64_t master, std::size_t p_index, std::size_t trial);

struct NeighborhoodReport {
  std::size_t k = 0;
  double threshold = 0;           // p^k n / 2
  std::uint64_t total_subsets = 0;  // C(n,k), saturating
  std::uint64_t checked = 0;
  bool sampled = false;
  double fraction_large = 0;      // |N(S)| >= threshold
  std::optional<double> fraction_clique;  // k == 2: N(S) holds a K_{s-2}
};

struct TrialRecord {
  std::size_t p_index = 0;
  double p = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;  // derive_seed(trial_seed(...)), the engine seed of the sample
  std::size_t edges = 0;
  std::uint64_t x_f = 0;   // copies of F in the sample
  std::optional<std::int64_t> wsat_lower;
  std::optional<std::int64_t> wsat_exact;
  std::optional<std::int64_t> wsat_upper;
  std::optional<bool> equal_to_complete;
  SolveStatus status = SolveStatus::complete;
  std::optional<NeighborhoodReport> neighborhood;
  std::optional<double> seconds;
};

struct PAggregate {
  double p = 0;
  std::size_t trials = 0;
  std::size_t budget_exceeded = 0;  // excluded from the fractions below
  double mean_edges = 0;
  double mean_x_f = 0;
  double mean_ratio = 0;            // mean of x_f / |E|, 0 for edgeless samples
  std::optional<double> fraction_equal;     // stability
  std::optional<double> fraction_contains;  // scan
  std::optional<double> mean_fraction_large;   // neighborhood
  std::optional<double> mean_fraction_clique;  // neighborhood, k == 2
};

struct ExperimentReport {
  ExperimentMode mode = ExperimentMode::stability;
  std::size_t n = 0;
  std::uint64_t master_seed = 0;
  std::vector<double> p_grid;
  std::optional<std::int64_t> complete_wsat;  // stability: wsat(K_n, F)
  std::optional<double> marker_m;             // scan: n^{-1/m(F)}
  std::optional<double> marker_mu;            // scan: n^{-1/mu(F)}
  std::vector<TrialRecord> records;           // sorted by (p_index, trial)
  std::vector<PAggregate> aggregates;         // one per grid point
};

// Recomputes per-p aggregates from sorted records.
std::vector<PAggregate> aggregate(ExperimentMode mode, const std::vector<double>& p_grid,
                                  const std::vector<TrialRecord>& records);

ExperimentReport stability_experiment(const ExperimentConfig& cfg);
// Throws SandwichViolation if |E|-X_F <= wsat <= |E| fails on any trial.
ExperimentReport sandwich_check(const ExperimentConfig& cfg);
ExperimentReport neighborhood_experiment(const ExperimentConfig& cfg);
ExperimentReport threshold_scan(const ExperimentConfig& cfg);
// Dispatches on cfg.mode.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// Over every k-subset (or sample_cap random ones when C(n,k) exceeds a
// nonzero cap): the fraction whose common neighbourhood has at least
// p^k n / 2 vertices, and for k == 2 the fraction whose common neighbourhood
// contains a clique on s-2 vertices.
NeighborhoodReport neighborhood_property_check(const Graph& g, const Pattern& f, std::size_t k, double p,
                                               std::size_t sample_cap, Seed seed);

// (s!/|Aut(F)|) C(n,s) p^t.
double expected_copies(std::size_t n, double p, const Pattern& f);

// One row per trial: p,trial,seed,edges,x_f,wsat_lower,wsat_exact,wsat_upper,
// equal_to_complete,status. Missing values are empty fields.
std::string to_csv(const ExperimentReport& report);

}  // namespace wsat
