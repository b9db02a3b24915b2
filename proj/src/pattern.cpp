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


#include "wsat/pattern.hpp"

#include <algorithm>
#include <deque>

#include "wsat/density.hpp"
#include "wsat/errors.hpp"

namespace wsat {
namespace {

// Greedy connectivity order: each next vertex has the most already placed
// neighbours, then the highest degree, then the lowest index.
MatchPlan make_plan(const Graph& f, std::vector<Vertex> prefix) {
  const std::size_t s = f.order();
  std::vector<bool> placed(s, false);
  for (Vertex v : prefix) placed[v] = true;
  MatchPlan plan;
  plan.order = std::move(prefix);
  while (plan.order.size() < s) {
    Vertex best = 0;
    long best_key[3] = {-1, -1, 0};
    for (Vertex v = 0; v < s; ++v) {
      if (placed[v]) continue;
      long links = 0;
      for (Vertex w : plan.order) links += f.adjacent(v, w) ? 1 : 0;
      long key[3] = {links, static_cast<long>(f.degree(v)), -static_cast<long>(v)};
      if (std::lexicographical_compare(best_key, best_key + 3, key, key + 3)) {
        std::copy(key, key + 3, best_key);
        best = v;
      }
    }
    placed[best] = true;
    plan.order.push_back(best);
  }
  plan.back.resize(s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (f.adjacent(plan.order[i], plan.order[j])) plan.back[i].push_back(j);
  return plan;
}

std::optional<std::size_t> diameter_of(const Graph& f) {
  std::size_t diam = 0;
  for (Vertex src = 0; src < f.order(); ++src) {
    std::vector<int> dist(f.order(), -1);
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : f.neighbours(x))
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
    for (int d : dist) {
      if (d < 0) return std::nullopt;
      diam = std::max(diam, static_cast<std::size_t>(d));
    }
  }
  return diam;
}

// Backtracking subgraph matcher over bitset candidate sets.
class Matcher {
 public:
  Matcher(const Graph& g, const Pattern& f, bool ordered)
      : g_(g),
        f_(f),
        ordered_(ordered),
        words_(g.words()),
        mapping_(f.s(), 0),
        used_(g.words(), 0),
        cand_(f.s() * g.words(), 0),
        all_(g.words(), 0),
        scratch_(f.s()) {
    for (std::size_t v = 0; v < g.order(); ++v) all_[v / 64] |= Word{1} << (v % 64);
  }

  // visit(mapping) returns true to stop. Returns true if stopped.
  template <class Visit>
  bool run(const MatchPlan& plan, Visit&& visit) {
    return extend(plan, 0, visit);
  }

  // Same, with order[0] -> a and order[1] -> b fixed.
  template <class Visit>
  bool run_anchored(const MatchPlan& plan, Vertex a, Vertex b, Visit&& visit) {
    const Vertex pa = plan.order[0], pb = plan.order[1];
    if (g_.degree(a) < f_.graph().degree(pa) || g_.degree(b) < f_.graph().degree(pb)) return false;
    mapping_[pa] = a;
    mapping_[pb] = b;
    set_used(a, true);
    set_used(b, true);
    bool stopped = extend(plan, 2, visit);
    set_used(a, false);
    set_used(b, false);
    return stopped;
  }

  const std::vector<Vertex>& mapping() const { return mapping_; }

 private:
  const Graph& g_;
  const Pattern& f_;
  bool ordered_;
  std::size_t words_;
  std::vector<Vertex> mapping_;
  std::vector<Word> used_;
  std::vector<Word> cand_;
  std::vector<Word> all_;
  std::vector<std::vector<Vertex>> scratch_;

  void set_used(Vertex v, bool on) {
    if (on)
      used_[v / 64] |= Word{1} << (v % 64);
    else
      used_[v / 64] &= ~(Word{1} << (v % 64));
  }

  template <class Visit>
  bool extend(const MatchPlan& plan, std::size_t pos, Visit& visit) {
    if (pos == plan.order.size()) return visit(mapping_);
    const Vertex pv = plan.order[pos];
    const std::size_t need = f_.graph().degree(pv);
    std::span<Word> cand(cand_.data() + pos * words_, words_);
    const auto& back = plan.back[pos];
    if (back.empty()) {
      kernels::andnot_words(cand, all_, used_);
    } else {
      kernels::andnot_words(cand, g_.row(mapping_[plan.order[back[0]]]), used_);
      for (std::size_t k = 1; k < back.size(); ++k)
        kernels::and_words(cand, cand, g_.row(mapping_[plan.order[back[k]]]));
    }

    auto try_vertex = [&](Vertex x) {
      if (g_.degree(x) < need) return false;
      mapping_[pv] = x;
      set_used(x, true);
      bool stopped = extend(plan, pos + 1, visit);
      set_used(x, false);
      return stopped;
    };

    if (!ordered_) {
      bool stopped = false;
      for (std::size_t w = 0; w < words_ && !stopped; ++w) {
        Word bits = cand[w];
        while (bits && !stopped) {
          stopped = try_vertex(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
          bits &= bits - 1;
        }
      }
      return stopped;
    }

    auto& list = scratch_[pos];
    list.clear();
    for_each_bit(std::span<const Word>(cand), [&](std::size_t x) { list.push_back(static_cast<Vertex>(x)); });
    std::sort(list.begin(), list.end(), [&](Vertex a, Vertex b) {
      return g_.degree(a) != g_.degree(b) ? g_.degree(a) < g_.degree(b) : a < b;
    });
    for (Vertex x : list)
      if (try_vertex(x)) return true;
    return false;
  }
};

}  // namespace

Pattern normalize_pattern(const Graph& f) {
  if (f.size() == 0) throw ParameterError("pattern must have at least one edge");
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < f.order(); ++v)
    if (f.degree(v) > 0) keep.push_back(v);

  Pattern p;
  p.graph_ = f.induced(keep);
  p.delta_ = p.graph_.min_degree();
  p.max_deg_ = p.graph_.max_degree();
  p.m_ = density_m(p.graph_);
  p.mu_ = density_mu(p.graph_);
  p.aut_ = automorphism_count(p.graph_);
  p.edges_ = p.graph_.edges();

  Vertex start = 0;
  for (Vertex v = 1; v < p.graph_.order(); ++v)
    if (p.graph_.degree(v) > p.graph_.degree(start)) start = v;
  p.full_plan_ = make_plan(p.graph_, {start});
  for (const Edge& e : p.edges_) p.edge_plans_.push_back(make_plan(p.graph_, {e.u, e.v}));
  p.diameter_ = diameter_of(p.graph_);
  return p;
}

bool contains_copy(const Graph& g, const Pattern& f) {
  if (g.order() < f.s() || g.size() < f.t()) return false;
  Matcher m(g, f, false);
  return m.run(f.full_plan(), [](const std::vector<Vertex>&) { return true; });
}

std::optional<CopyWitness> find_copy(const Graph& g, const Pattern& f) {
  if (g.order() < f.s() || g.size() < f.t()) return std::nullopt;
  Matcher m(g, f, true);
  std::optional<CopyWitness> out;
  m.run(f.full_plan(), [&](const std::vector<Vertex>& map) {
    out = CopyWitness{map};
    return true;
  });
  return out;
}

std::optional<CopyWitness> copy_through_edge(const Graph& g, const Pattern& f, Edge e) {
  if (e.u == e.v || e.v >= g.order() || !g.has_edge(e))
    throw ParameterError("copy_through_edge: " + to_string(e) + " is not an edge of the host");
  if (g.order() < f.s() || g.size() < f.t()) return std::nullopt;
  Matcher m(g, f, true);
  std::optional<CopyWitness> out;
  auto grab = [&](const std::vector<Vertex>& map) {
    out = CopyWitness{map};
    return true;
  };
  for (std::size_t i = 0; i < f.edges().size(); ++i) {
    const MatchPlan& plan = f.edge_plan(i);
    if (m.run_anchored(plan, e.u, e.v, grab)) return out;
    if (m.run_anchored(plan, e.v, e.u, grab)) return out;
  }
  return std::nullopt;
}

bool has_copy_through_edge(const Graph& g, const Pattern& f, Edge e) {
  if (e.u == e.v || e.v >= g.order() || !g.has_edge(e))
    throw ParameterError("has_copy_through_edge: " + to_string(e) + " is not an edge of the host");
  if (g.order() < f.s() || g.size() < f.t()) return false;
  Matcher m(g, f, false);
  auto stop = [](const std::vector<Vertex>&) { return true; };
  for (std::size_t i = 0; i < f.edges().size(); ++i) {
    const MatchPlan& plan = f.edge_plan(i);
    if (m.run_anchored(plan, e.u, e.v, stop) || m.run_anchored(plan, e.v, e.u, stop)) return true;
  }
  return false;
}

std::uint64_t count_injective_maps(const Graph& g, const Pattern& f) {
  if (g.order() < f.s() || g.size() < f.t()) return 0;
  Matcher m(g, f, false);
  std::uint64_t count = 0;
  m.run(f.full_plan(), [&](const std::vector<Vertex>&) {
    ++count;
    return false;
  });
  return count;
}

std::uint64_t count_copies(const Graph& g, const Pattern& f) {
  return count_injective_maps(g, f) / f.aut();
}

std::uint64_t automorphism_count(const Graph& f) {
  const std::size_t s = f.order();
  if (s == 0) return 1;
  std::vector<Vertex> order(s);
  for (Vertex v = 0; v < s; ++v) order[v] = v;
  std::vector<Vertex> image(s, 0);
  std::vector<bool> used(s, false);
  std::uint64_t count = 0;

  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == s) {
      ++count;
      return;
    }
    const Vertex pv = order[pos];
    for (Vertex x = 0; x < s; ++x) {
      if (used[x] || f.degree(x) != f.degree(pv)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < pos && ok; ++j)
        ok = f.adjacent(pv, order[j]) == f.adjacent(x, image[order[j]]);
      if (!ok) continue;
      used[x] = true;
      image[pv] = x;
      self(self, pos + 1);
      used[x] = false;
    }
  };
  recurse(recurse, 0);
  return count;
}

bool is_valid_copy(const Graph& g, const Pattern& f, const CopyWitness& w,
                   std::optional<Edge> through) {
  if (w.mapping.size() != f.s()) return false;
  std::vector<bool> seen(g.order(), false);
  for (Vertex x : w.mapping) {
    if (x >= g.order() || seen[x]) return false;
    seen[x] = true;
  }
  bool hit = !through.has_value();
  for (const Edge& pe : f.edges()) {
    Edge he(w.mapping[pe.u], w.mapping[pe.v]);
    if (!g.has_edge(he)) return false;
    if (through && he == *through) hit = true;
  }
  return hit;
}

}  // namespace wsat
