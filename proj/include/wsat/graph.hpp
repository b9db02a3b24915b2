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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wsat/bitset.hpp"

namespace wsat {

using Vertex = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Degrees and the edge count are cached and kept in sync by add/remove.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Throws ParameterError on loops, duplicates and out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  std::size_t words() const noexcept { return words_; }

  bool adjacent(Vertex a, Vertex b) const {
    return (rows_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }

  // Returns false when the edge is already present.
  bool add_edge(Edge e);
  // Returns false when the edge is absent.
  bool remove_edge(Edge e);

  std::size_t degree(Vertex v) const { return degree_[v]; }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  std::span<const Word> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  // Lexicographically sorted.
  std::vector<Edge> edges() const;
  std::vector<Vertex> neighbours(Vertex v) const;

  // Same vertex set and E(*this) subset of E(host).
  bool is_spanning_subgraph_of(const Graph& host) const;

  // Subgraph induced on vs, relabelled so vs[i] becomes i.
  Graph induced(std::span<const Vertex> vs) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<Word> rows_;
  std::vector<std::uint32_t> degree_;

  void check_vertex(Vertex v) const;
};

// Checks loop-freeness, symmetry, the cached edge count and cached degrees
// by scanning every pair.
bool is_valid(const Graph& g);

// Graph with the union of both edge sets. Orders must match.
Graph edge_union(const Graph& a, const Graph& b);

std::string to_string(const Edge& e);

}  // namespace wsat
