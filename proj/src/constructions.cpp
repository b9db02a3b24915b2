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


#include "wsat/constructions.hpp"

#include <algorithm>

#include "wsat/clique.hpp"
#include "wsat/errors.hpp"
#include "wsat/family.hpp"
#include "wsat/solver.hpp"

namespace wsat {
namespace {

std::string list(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "}";
}

Construction verified(const Graph& host, const Pattern& f, Construction c, const std::string& what) {
  if (contains_copy(c.h, f))
    throw ConstructionFailedError(what + ": " + explain_failure(host, f, c.h));
  ClosureResult r = closure(host, f, c.h);
  if (!r.percolates) throw ConstructionFailedError(what + ": " + explain_failure(host, f, c.h));
  c.trace = std::move(r.trace);
  return c;
}

// Reverse-delete saturator of G[part], mapped back into host labels.
std::vector<Edge> core_edges(const Graph& g, const Pattern& f, const std::vector<Vertex>& part, Seed seed) {
  const Graph sub = g.induced(part);
  const WsatResult r = greedy_upper_bound(sub, f, seed);
  std::vector<Edge> out;
  for (const Edge& e : r.certificate->h.edges()) out.emplace_back(part[e.u], part[e.v]);
  return out;
}

}  // namespace

std::string explain_failure(const Graph& host, const Pattern& f, const Graph& h) {
  if (auto copy = find_copy(h, f)) return "candidate contains a copy of the pattern on " + list(copy->mapping);
  ClosureResult r = closure(host, f, h, {.record_trace = false, .scan_seed = std::nullopt});
  for (const Edge& e : host.edges())
    if (!r.closure.has_edge(e))
      return "edge " + to_string(e) + " is never activated (closure reaches " +
             std::to_string(r.closure.size()) + " of " + std::to_string(host.size()) + " edges)";
  return "candidate is weakly saturated";
}

Construction construct_complete_host_saturator(std::size_t n, const Pattern& f, std::size_t m,
                                               const Graph& core) {
  const std::size_t need = f.delta() - 1;
  if (m == 0 || m > n) throw ParameterError("clique size must satisfy 1 <= m <= n");
  if (need > m) throw ParameterError("clique size must be at least delta(F)-1 = " + std::to_string(need));
  if (core.order() != m) throw ParameterError("core must have exactly m vertices");

  const Graph clique = build_named_graph(GraphFamily::complete(m));
  if (!is_weakly_saturated(clique, f, core))
    throw ConstructionFailedError("core is not weakly saturated in K_" + std::to_string(m) + ": " +
                                  explain_failure(clique, f, core));

  Construction c;
  c.h = Graph(n);
  for (const Edge& e : core.edges()) c.h.add_edge(e);
  for (Vertex v = static_cast<Vertex>(m); v < n; ++v)
    for (Vertex j = 0; j < need; ++j) c.h.add_edge({v, j});
  c.core_edges = core.size();
  for (Vertex v = 0; v < m; ++v) c.clique.push_back(v);
  return verified(build_named_graph(GraphFamily::complete(n)), f, std::move(c), "complete-host construction");
}

Construction construct_random_host_saturator(const Graph& g, const Pattern& f, std::size_t m, Seed seed) {
  const std::size_t need = f.delta() - 1;
  if (m == 0) throw ParameterError("clique size must be positive");
  auto omega = find_clique(g, m);
  if (!omega) throw StructureAbsentError("host has no clique of size " + std::to_string(m));

  Construction c;
  c.clique = *omega;
  c.h = Graph(g.order());
  for (const Edge& e : core_edges(g, f, c.clique, seed)) c.h.add_edge(e);
  c.core_edges = c.h.size();

  const Bitset common = common_neighbours(g, c.clique);
  Bitset in_omega(g.order());
  for (Vertex v : c.clique) in_omega.set(v);

  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_omega.test(v)) continue;
    if (common.test(v)) {
      if (need > m) throw ConstructionFailedError("clique smaller than delta(F)-1");
      for (std::size_t j = 0; j < need; ++j) c.h.add_edge({v, c.clique[j]});
      continue;
    }
    // N_G({v} + Omega) in ascending index order
    Bitset targets(g.order());
    kernels::and_words(targets.words(), common.words(), g.row(v));
    std::vector<std::size_t> xs = targets.to_vector();
    if (xs.size() < need)
      throw ConstructionFailedError("vertex " + std::to_string(v) + " has only " + std::to_string(xs.size()) +
                                    " common neighbours with the clique " + list(c.clique) + ", needs " +
                                    std::to_string(need));
    for (std::size_t j = 0; j < need; ++j) c.h.add_edge({v, static_cast<Vertex>(xs[j])});
  }
  return verified(g, f, std::move(c), "random-host construction");
}

Construction construct_clique_partition_saturator(const Graph& g, const Pattern& f, Seed seed) {
  const std::size_t s = f.s();
  Construction c;
  c.parts = greedy_clique_partition(g);
  c.h = Graph(g.order());
  std::int64_t bound = 0;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    const auto edges = core_edges(g, f, c.parts[i], Seed{seed.master, seed.stream + i});
    for (const Edge& e : edges) c.h.add_edge(e);
    bound += static_cast<std::int64_t>(edges.size()) + 2 * static_cast<std::int64_t>((s - 1) * (s - 2));
  }
  c.core_edges = c.h.size();
  c.edge_bound = bound;

  const auto& v1 = c.parts.front();
  if (v1.size() < s - 2)
    throw StructureAbsentError("set S unavailable: first part has " + std::to_string(v1.size()) +
                               " vertices, needs s-2 = " + std::to_string(s - 2));
  const std::vector<Vertex> big_s(v1.begin(), v1.begin() + static_cast<std::ptrdiff_t>(s - 2));
  const Bitset ns = common_neighbours(g, big_s);
  Bitset in_s(g.order());
  for (Vertex v : big_s) in_s.set(v);

  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    const auto& part = c.parts[i];
    std::vector<Vertex> si;
    for (Vertex v : part)
      if (ns.test(v) && si.size() < s - 1) si.push_back(v);
    if (si.size() < s - 1) {
      // keep all of N_G(S) in V_i and top up with the lowest other vertices
      for (Vertex v : part)
        if (!ns.test(v) && !in_s.test(v) && si.size() < s - 1) si.push_back(v);
      std::sort(si.begin(), si.end());
    }
    if (si.size() < s - 1)
      throw StructureAbsentError("set S_" + std::to_string(i + 1) + " unavailable: part " +
                                 std::to_string(i + 1) + " " + list(part) + " has fewer than s-1 = " +
                                 std::to_string(s - 1) + " usable vertices");

    std::vector<Vertex> s_union = big_s;
    s_union.insert(s_union.end(), si.begin(), si.end());
    const Bitset target = common_neighbours(g, s_union);
    std::optional<std::vector<Vertex>> ri;
    for (const auto& other : c.parts) {
      std::vector<Vertex> pick;
      for (Vertex v : other)
        if (target.test(v) && pick.size() < s - 2) pick.push_back(v);
      if (pick.size() == s - 2) {
        ri = std::move(pick);
        break;
      }
    }
    if (!ri)
      throw StructureAbsentError("set R_" + std::to_string(i + 1) + " unavailable: no part holds s-2 = " +
                                 std::to_string(s - 2) + " common neighbours of S and S_" +
                                 std::to_string(i + 1) + " " + list(s_union));

    for (Vertex x : si) {
      for (Vertex y : big_s)
        if (g.adjacent(x, y)) c.h.add_edge({x, y});
      for (Vertex y : *ri)
        if (x != y && g.adjacent(x, y)) c.h.add_edge({x, y});
    }
  }
  // The union can hold copies of F. Deleting an edge that lies in a copy
  // never shrinks the closure, so reverse-delete inside H keeps percolation.
  if (contains_copy(c.h, f)) {
    const WsatResult pruned = greedy_upper_bound(c.h, f, Seed{seed.master, seed.stream + c.parts.size()});
    c.h = pruned.certificate->h;
  }
  return verified(g, f, std::move(c), "clique-partition construction");
}

}  // namespace wsat
