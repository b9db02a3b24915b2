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
#include <optional>
#include <vector>

#include "wsat/bitset.hpp"
#include "wsat/graph.hpp"

namespace wsat {

// First clique of the given size among `allowed` (all vertices when empty)
// in lexicographic order of sorted vertex lists.
std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t size,
                                               const Bitset* allowed = nullptr);

// A maximum clique of G[allowed], by branch and bound with a greedy
// colouring bound. Deterministic; ascending vertex order.
std::vector<Vertex> maximum_clique(const Graph& g, const Bitset& allowed);

// Largest-first greedy partition of V(G) into cliques: repeatedly remove a
// maximum clique of what remains.
std::vector<std::vector<Vertex>> greedy_clique_partition(const Graph& g);

// Vertices adjacent to every vertex of xs (all vertices when xs is empty,
// minus xs itself).
Bitset common_neighbours(const Graph& g, const std::vector<Vertex>& xs);

}  // namespace wsat
