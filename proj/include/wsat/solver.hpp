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
#include <string_view>

#include "wsat/bootstrap.hpp"
#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"
#include "wsat/random.hpp"

namespace wsat {

// Exact search is exponential; solver entry points reject larger patterns.
inline constexpr std::size_t kMaxPatternVertices = 12;

enum class Method { formula, exact_search, greedy, bound };
enum class SolveStatus { complete, budget_exceeded };

std::string_view to_string(Method m);
std::string_view to_string(SolveStatus s);

// A weakly saturated spanning subgraph and the activation order that
// completes it to the host.
struct Certificate {
  Graph h;
  ActivationTrace trace;
};

struct WsatResult {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::optional<std::int64_t> exact;
  std::optional<Certificate> certificate;
  Method method = Method::bound;
  SolveStatus status = SolveStatus::complete;
  std::uint64_t nodes = 0;  // search nodes visited
};

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 60.0;
};

struct SolveOptions {
  SearchBudget budget;
  std::size_t workers = 1;
  // Seeds the reverse-delete runs that provide the initial upper bound.
  Seed greedy_seed{0x5eed, 0};
  std::size_t greedy_repeats = 1;
};

// ceil(min{|E(G)|, (t-1) + min{delta(G), delta(F)-1} (|V(G)|-s) / 2}).
// Throws PreconditionError when |V(G)| < s.
std::int64_t lower_bound_general(const Graph& g, const Pattern& f);

// Iterative deepening over k-edge spanning subgraphs, k = lower bound
// upwards, in colexicographic order of edge index sets. A subset is pruned
// as soon as a vertex cannot reach degree min{d_G(v), delta(F)-1} or the
// chosen edges already contain F. Leaves are tested for percolation.
// Reverse-delete supplies the starting upper bound, so the search stops one
// level below it. With several workers the top-level branches are split
// round robin and the colex-first solution is still the one reported.
WsatResult wsat_exact(const Graph& g, const Pattern& f, const SolveOptions& options = {});
WsatResult wsat_exact(const Graph& g, const Pattern& f, const SearchBudget& budget);

// Reverse-delete: from H = G repeatedly delete a uniformly chosen edge that
// lies in a copy of F until H is F-free, then drop (in seeded random order)
// every edge whose removal keeps H percolating. The result is a minimal
// weakly saturated graph. The trace is the reversed deletion order, or a
// fresh closure trace when the second pass removed anything.
WsatResult greedy_upper_bound(const Graph& g, const Pattern& f, Seed seed);

// Best of `repeats` greedy runs using streams seed.stream, seed.stream+1, ...
WsatResult best_greedy(const Graph& g, const Pattern& f, Seed seed, std::size_t repeats);

}  // namespace wsat
