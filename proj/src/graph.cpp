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


#include "wsat/graph.hpp"

#include <algorithm>

#include "wsat/errors.hpp"

namespace wsat {

Graph::Graph(std::size_t n)
    : n_(n), words_(words_for(n)), rows_(n * words_for(n), 0), degree_(n, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (!g.add_edge(e)) throw ParameterError("duplicate edge " + to_string(e));
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_)
    throw ParameterError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(n_));
}

bool Graph::add_edge(Edge e) {
  check_vertex(e.v);
  if (e.u == e.v) throw ParameterError("loop at vertex " + std::to_string(e.u));
  if (has_edge(e)) return false;
  rows_[e.u * words_ + e.v / 64] |= Word{1} << (e.v % 64);
  rows_[e.v * words_ + e.u / 64] |= Word{1} << (e.u % 64);
  ++degree_[e.u];
  ++degree_[e.v];
  ++m_;
  return true;
}

bool Graph::remove_edge(Edge e) {
  check_vertex(e.v);
  if (e.u == e.v || !has_edge(e)) return false;
  rows_[e.u * words_ + e.v / 64] &= ~(Word{1} << (e.v % 64));
  rows_[e.v * words_ + e.u / 64] &= ~(Word{1} << (e.u % 64));
  --degree_[e.u];
  --degree_[e.v];
  --m_;
  return true;
}

std::size_t Graph::min_degree() const {
  if (n_ == 0) return 0;
  return *std::min_element(degree_.begin(), degree_.end());
}

std::size_t Graph::max_degree() const {
  if (n_ == 0) return 0;
  return *std::max_element(degree_.begin(), degree_.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for_each_bit(row(u), [&](std::size_t v) {
      if (v > u) out.emplace_back(u, static_cast<Vertex>(v));
    });
  }
  return out;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree_[v]);
  for_each_bit(row(v), [&](std::size_t w) { out.push_back(static_cast<Vertex>(w)); });
  return out;
}

bool Graph::is_spanning_subgraph_of(const Graph& host) const {
  if (host.n_ != n_) return false;
  return kernels::is_subset(rows_, host.rows_);
}

Graph Graph::induced(std::span<const Vertex> vs) const {
  Graph g(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j])) g.add_edge({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return g;
}

bool is_valid(const Graph& g) {
  std::size_t twice = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    std::size_t d = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
      d += g.adjacent(u, v) ? 1 : 0;
    }
    if (d != g.degree(u)) return false;
    twice += d;
  }
  // padding bits beyond n must stay clear
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.order() % 64 && (g.row(u).back() >> (g.order() % 64)) != 0) return false;
  }
  return twice == 2 * g.size();
}

Graph edge_union(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw ParameterError("edge_union: orders differ");
  Graph g = a;
  for (const Edge& e : b.edges()) g.add_edge(e);
  return g;
}

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace wsat
