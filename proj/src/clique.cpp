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


#include "wsat/clique.hpp"

#include <algorithm>
#include <bit>

namespace wsat {
namespace {

Bitset all_vertices(const Graph& g) {
  Bitset b(g.order());
  b.fill();
  return b;
}

bool extend_clique(const Graph& g, std::vector<Vertex>& chosen, std::size_t size, const Bitset& cand) {
  if (chosen.size() == size) return true;
  if (chosen.size() + cand.count() < size) return false;
  bool found = false;
  cand.for_each([&](std::size_t v) {
    if (found) return;
    Bitset next(g.order());
    kernels::and_words(next.words(), cand.words(), g.row(static_cast<Vertex>(v)));
    // only higher-indexed vertices, so each clique is visited once
    for (std::size_t i = 0; i <= v; ++i) next.reset(i);
    chosen.push_back(static_cast<Vertex>(v));
    if (extend_clique(g, chosen, size, next)) {
      found = true;
      return;
    }
    chosen.pop_back();
  });
  return found;
}

class MaxClique {
 public:
  explicit MaxClique(const Graph& g) : g_(g) {}

  std::vector<Vertex> solve(const Bitset& allowed) {
    best_.clear();
    std::vector<Vertex> current;
    expand(current, allowed);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  const Graph& g_;
  std::vector<Vertex> best_;

  // Greedy sequential colouring of p in ascending index order; returns the
  // vertices with their colour numbers, colour-sorted.
  void colour(const Bitset& p, std::vector<Vertex>& order, std::vector<std::size_t>& bounds) {
    Bitset uncoloured = p;
    std::size_t colour_no = 0;
    while (!uncoloured.none()) {
      ++colour_no;
      Bitset q = uncoloured;
      while (!q.none()) {
        std::size_t v = 0;
        for (std::size_t w = 0; w < q.words().size(); ++w)
          if (q.words()[w]) {
            v = w * 64 + static_cast<std::size_t>(std::countr_zero(q.words()[w]));
            break;
          }
        uncoloured.reset(v);
        q.reset(v);
        kernels::andnot_words(q.words(), q.words(), g_.row(static_cast<Vertex>(v)));
        order.push_back(static_cast<Vertex>(v));
        bounds.push_back(colour_no);
      }
    }
  }

  void expand(std::vector<Vertex>& current, Bitset p) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bounds;
    colour(p, order, bounds);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bounds[i] <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      Bitset next(g_.order());
      kernels::and_words(next.words(), p.words(), g_.row(v));
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      p.reset(v);
    }
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t size, const Bitset* allowed) {
  std::vector<Vertex> chosen;
  const Bitset cand = allowed ? *allowed : all_vertices(g);
  if (size == 0) return chosen;
  if (extend_clique(g, chosen, size, cand)) return chosen;
  return std::nullopt;
}

std::vector<Vertex> maximum_clique(const Graph& g, const Bitset& allowed) {
  if (allowed.none()) return {};
  return MaxClique(g).solve(allowed);
}

std::vector<std::vector<Vertex>> greedy_clique_partition(const Graph& g) {
  std::vector<std::vector<Vertex>> parts;
  Bitset remaining = all_vertices(g);
  MaxClique solver(g);
  while (!remaining.none()) {
    std::vector<Vertex> part = solver.solve(remaining);
    for (Vertex v : part) remaining.reset(v);
    parts.push_back(std::move(part));
  }
  return parts;
}

Bitset common_neighbours(const Graph& g, const std::vector<Vertex>& xs) {
  Bitset out = all_vertices(g);
  for (Vertex x : xs) kernels::and_words(out.words(), out.words(), g.row(x));
  for (Vertex x : xs) out.reset(x);
  return out;
}

}  // namespace wsat
