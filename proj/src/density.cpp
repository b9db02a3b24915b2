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


#include "wsat/density.hpp"

#include <bit>
#include <vector>

namespace wsat {

Rational density_m(const Graph& g) {
  if (g.size() == 0) throw UndefinedDensityError("density of an edgeless graph is undefined");

  std::vector<Vertex> live;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) live.push_back(v);
  if (live.size() > kMaxDensityVertices)
    throw ParameterError("density_m: more than " + std::to_string(kMaxDensityVertices) +
                         " non-isolated vertices");

  const std::size_t k = live.size();
  std::vector<std::uint32_t> adj(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (g.adjacent(live[i], live[j])) adj[i] |= 1U << j;

  // Edge counts by dynamic programming over subsets: e(S) = e(S - v) + |N(v) & S|
  // where v is the lowest vertex of S.
  std::vector<std::uint16_t> edges(std::size_t{1} << k, 0);
  Rational best(0);
  for (std::uint32_t s = 1; s < (1U << k); ++s) {
    const auto v = static_cast<std::size_t>(std::countr_zero(s));
    const std::uint32_t rest = s & (s - 1);
    edges[s] = static_cast<std::uint16_t>(edges[rest] + std::popcount(adj[v] & rest));
    if (edges[s] == 0) continue;
    Rational r(edges[s], std::popcount(s));
    if (r > best) best = r;
  }
  return best;
}

Rational density_mu(const Graph& g) {
  Rational m = density_m(g);
  if (g.order() == 2) return m;
  Rational alt(static_cast<std::int64_t>(g.size()) - 1, static_cast<std::int64_t>(g.order()) - 2);
  return alt > m ? alt : m;
}

}  // namespace wsat
