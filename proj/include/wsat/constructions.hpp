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
#include <vector>

#include "wsat/bootstrap.hpp"
#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"
#include "wsat/random.hpp"

namespace wsat {

// A saturator that has passed closure verification, with the activation
// trace that proves it. Constructions never return unverified graphs: they
// throw StructureAbsentError or ConstructionFailedError instead.
struct Construction {
  Graph h;
  ActivationTrace trace;
  std::vector<Vertex> clique;               // Omega (random-host method)
  std::vector<std::vector<Vertex>> parts;   // clique partition (partition method)
  std::size_t core_edges = 0;
  std::optional<std::int64_t> edge_bound;   // partition method: sum(|core_i| + 2(s-1)(s-2))
};

// Human-readable reason why h is not weakly (host, F)-saturated: a copy of F
// inside h, or the first host edge the closure never reaches.
std::string explain_failure(const Graph& host, const Pattern& f, const Graph& h);

// Core on Omega = {0..m-1} plus delta-1 edges from every other vertex v to
// vertices 0..delta-2 of Omega. |E(H)| = (delta-1)(n-m) + |E(core)|.
// Requires delta-1 <= m <= n and core on m vertices that is weakly
// (K_m, F)-saturated.
Construction construct_complete_host_saturator(std::size_t n, const Pattern& f, std::size_t m,
                                               const Graph& core);

// Random-host variant: Omega is the first m-clique of G; the core is a
// reverse-delete saturator of G[Omega]; each common neighbour of Omega gets
// delta-1 edges into Omega and each other vertex v gets delta-1 edges to the
// lowest-indexed vertices of N_G({v} + Omega).
Construction construct_random_host_saturator(const Graph& g, const Pattern& f, std::size_t m,
                                             Seed seed = {});

// Clique-partition variant: greedy largest-first clique partition V_1..V_r,
// reverse-delete cores per part, S = lowest s-2 vertices of V_1, and per
// part S_i (s-1 vertices, preferring N_G(S)) and R_i (s-2 vertices of
// N_G(S + S_i) inside the first part that has enough). H is the union of
// the cores and E_G(S_i, S + R_i), thinned by reverse-delete when it
// contains F. All choices are lowest-index.
Construction construct_clique_partition_saturator(const Graph& g, const Pattern& f, Seed seed = {});

}  // namespace wsat
