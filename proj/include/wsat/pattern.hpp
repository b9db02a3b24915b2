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
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/rational.hpp"

namespace wsat {

// Injective map V(F) -> V(G); mapping[i] is the host vertex of pattern
// vertex i. Copies are subgraphs, not induced subgraphs.
struct CopyWitness {
  std::vector<Vertex> mapping;

  friend bool operator==(const CopyWitness&, const CopyWitness&) = default;
};

// Vertex order used by the backtracking matcher. back[i] lists the
// positions j < i whose pattern vertex is adjacent to order[i].
struct MatchPlan {
  std::vector<Vertex> order;
  std::vector<std::vector<std::size_t>> back;
};

// A pattern graph F without isolated vertices, with its invariants cached.
class Pattern {
 public:
  const Graph& graph() const noexcept { return graph_; }
  std::size_t s() const noexcept { return graph_.order(); }
  std::size_t t() const noexcept { return graph_.size(); }
  std::size_t delta() const noexcept { return delta_; }
  std::size_t max_deg() const noexcept { return max_deg_; }
  const Rational& m() const noexcept { return m_; }
  const Rational& mu() const noexcept { return mu_; }
  std::uint64_t aut() const noexcept { return aut_; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const MatchPlan& full_plan() const noexcept { return full_plan_; }
  // Plan whose first two vertices are the endpoints of edges()[i].
  const MatchPlan& edge_plan(std::size_t i) const { return edge_plans_.at(i); }

  bool connected() const noexcept { return diameter_.has_value(); }
  // Diameter when connected.
  std::optional<std::size_t> diameter() const noexcept { return diameter_; }

  friend Pattern normalize_pattern(const Graph& f);

 private:
  Pattern() = default;

  Graph graph_;
  std::size_t delta_ = 0;
  std::size_t max_deg_ = 0;
  Rational m_;
  Rational mu_;
  std::uint64_t aut_ = 1;
  std::vector<Edge> edges_;
  MatchPlan full_plan_;
  std::vector<MatchPlan> edge_plans_;
  std::optional<std::size_t> diameter_;
};

// Strips isolated vertices (order of the rest preserved) and computes the
// cached invariants. Throws ParameterError for an edgeless F.
Pattern normalize_pattern(const Graph& f);

bool contains_copy(const Graph& g, const Pattern& f);

// First copy under the deterministic search order.
std::optional<CopyWitness> find_copy(const Graph& g, const Pattern& f);

// A copy of F in G whose edge set contains e. Candidates are tried in
// ascending (degree, index) order, pattern edges in lexicographic order and
// for each both orientations, so the witness is deterministic.
// Throws ParameterError if e is not an edge of G.
std::optional<CopyWitness> copy_through_edge(const Graph& g, const Pattern& f, Edge e);

// Existence-only form of copy_through_edge; skips candidate ordering.
bool has_copy_through_edge(const Graph& g, const Pattern& f, Edge e);

// Number of injective edge-preserving maps F -> G.
std::uint64_t count_injective_maps(const Graph& g, const Pattern& f);

// X_F(G) = count_injective_maps / |Aut(F)|.
std::uint64_t count_copies(const Graph& g, const Pattern& f);

// |Aut(F)| by backtracking over adjacency-preserving bijections.
std::uint64_t automorphism_count(const Graph& f);

// True iff w is injective, in range, maps every edge of F onto an edge of G
// and, when through is given, some edge of F maps onto it.
bool is_valid_copy(const Graph& g, const Pattern& f, const CopyWitness& w,
                   std::optional<Edge> through = std::nullopt);

}  // namespace wsat
