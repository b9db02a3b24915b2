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


#include "wsat/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "wsat/errors.hpp"

namespace wsat {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::formula: return "formula";
    case Method::exact_search: return "exact-search";
    case Method::greedy: return "greedy";
    case Method::bound: return "bound";
  }
  return "unknown";
}

std::string_view to_string(SolveStatus s) {
  return s == SolveStatus::complete ? "complete" : "budget-exceeded";
}

std::int64_t lower_bound_general(const Graph& g, const Pattern& f) {
  if (g.order() < f.s())
    throw PreconditionError("lower bound needs |V(G)| >= |V(F)| (" + std::to_string(g.order()) +
                            " < " + std::to_string(f.s()) + ")");
  const auto md = static_cast<std::int64_t>(std::min(g.min_degree(), f.delta() - 1));
  const std::int64_t twice =
      2 * (static_cast<std::int64_t>(f.t()) - 1) + md * static_cast<std::int64_t>(g.order() - f.s());
  const std::int64_t bound = (twice + 1) / 2;
  return std::min(static_cast<std::int64_t>(g.size()), bound);
}

WsatResult greedy_upper_bound(const Graph& g, const Pattern& f, Seed seed) {
  Rng rng(seed);
  Graph h = g;
  std::vector<Edge> candidates = g.edges();
  std::vector<ActivationStep> deletions;
  while (!candidates.empty()) {
    const auto i = static_cast<std::size_t>(rng.below(candidates.size()));
    const Edge e = candidates[i];
    candidates[i] = candidates.back();
    candidates.pop_back();
    // Deleting edges never creates copies, so an edge found ineligible once
    // stays ineligible.
    auto witness = copy_through_edge(h, f, e);
    if (!witness) continue;
    h.remove_edge(e);
    deletions.push_back({e, std::move(*witness)});
  }

  Certificate cert{std::move(h), {}};
  if (deletions.empty()) {
    // G is F-free: nothing can be added back, so H = G is the only choice.
  } else {
    // Minimalization: drop every edge whose removal keeps H percolating.
    // Subgraphs of an F-free graph stay F-free.
    std::vector<Edge> kept = cert.h.edges();
    rng.shuffle(std::span<Edge>(kept));
    bool pruned = false;
    for (const Edge& e : kept) {
      cert.h.remove_edge(e);
      if (percolates(g, f, cert.h)) pruned = true;
      else cert.h.add_edge(e);
    }
    if (pruned) cert.trace = closure(g, f, cert.h).trace;
    else cert.trace.steps.assign(deletions.rbegin(), deletions.rend());
  }

  WsatResult r;
  r.upper = static_cast<std::int64_t>(cert.h.size());
  r.lower = g.order() >= f.s() ? std::min(lower_bound_general(g, f), r.upper) : r.upper;
  r.method = Method::greedy;
  r.certificate = std::move(cert);
  return r;
}

WsatResult best_greedy(const Graph& g, const Pattern& f, Seed seed, std::size_t repeats) {
  WsatResult best = greedy_upper_bound(g, f, seed);
  for (std::size_t i = 1; i < repeats; ++i) {
    WsatResult r = greedy_upper_bound(g, f, Seed{seed.master, seed.stream + i});
    if (r.upper < best.upper) best = std::move(r);
  }
  return best;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::atomic<std::size_t> best_branch{std::numeric_limits<std::size_t>::max()};
  std::mutex mutex;
  std::size_t found_branch = std::numeric_limits<std::size_t>::max();
  std::optional<Graph> found;
};

// All k-subsets of E(G) for one k.
class LevelSearch {
 public:
  LevelSearch(const Graph& g, const Pattern& f, const std::vector<Edge>& edges, std::size_t k,
              const SearchBudget& budget, Clock::time_point start, SharedState& shared)
      : g_(g), f_(f), edges_(edges), k_(k), budget_(budget), start_(start), shared_(shared) {
    const std::size_t n = g.order();
    required_.resize(n);
    for (Vertex v = 0; v < n; ++v)
      required_[v] = static_cast<int>(std::min(g.degree(v), f.delta() - 1));
    // prefix_[i * n + v]: edges with index < i incident to v
    prefix_.assign((edges.size() + 1) * n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::copy_n(prefix_.begin() + static_cast<std::ptrdiff_t>(i * n), n,
                  prefix_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
      ++prefix_[(i + 1) * n + edges[i].u];
      ++prefix_[(i + 1) * n + edges[i].v];
    }
  }

  // Explores top-level branches c = first, first + stride, ...
  void run_worker(std::size_t first, std::size_t stride) {
    Graph h(g_.order());
    const std::size_t m = edges_.size();
    if (k_ == 0) {
      if (first == 0) try_leaf(h, 0);
      return;
    }
    for (std::size_t c = k_ - 1 + first; c < m; c += stride) {
      if (shared_.aborted.load(std::memory_order_relaxed)) return;
      if (c > shared_.best_branch.load()) return;
      if (branch(h, k_, c) && descend(h, k_ - 1, c)) {
        record(h, c);
        return;
      }
      h.remove_edge(edges_[c]);
    }
  }

 private:
  const Graph& g_;
  const Pattern& f_;
  const std::vector<Edge>& edges_;
  std::size_t k_;
  const SearchBudget& budget_;
  Clock::time_point start_;
  SharedState& shared_;
  std::vector<int> required_;
  std::vector<int> prefix_;

  int available(std::size_t below, Vertex v) const { return prefix_[below * g_.order() + v]; }

  bool tick() {
    const std::uint64_t count = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > budget_.max_nodes) shared_.aborted = true;
    if ((count & 0x3ff) == 0) {
      std::chrono::duration<double> elapsed = Clock::now() - start_;
      if (elapsed.count() > budget_.max_seconds) shared_.aborted = true;
    }
    return !shared_.aborted.load(std::memory_order_relaxed);
  }

  // Adds edge c as the largest of the r remaining picks if the degree
  // requirements stay reachable and no copy of F appears. On success the
  // edge is left in h.
  bool branch(Graph& h, std::size_t r, std::size_t c) {
    if (!tick()) return false;
    const Edge e = edges_[c];
    int deficit = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      const int have = static_cast<int>(h.degree(v)) + ((v == e.u || v == e.v) ? 1 : 0);
      const int need = required_[v] - have;
      if (need <= 0) continue;
      if (need > available(c, v)) return false;
      deficit += need;
    }
    if (deficit > 2 * static_cast<int>(r - 1)) return false;
    h.add_edge(e);
    if (has_copy_through_edge(h, f_, e)) {
      h.remove_edge(e);
      return false;
    }
    return true;
  }

  // Chooses r more edges from indices [0, hi).
  bool descend(Graph& h, std::size_t r, std::size_t hi) {
    if (r == 0) return try_leaf(h, hi);
    for (std::size_t c = r - 1; c < hi; ++c) {
      if (shared_.aborted.load(std::memory_order_relaxed)) return false;
      if (!branch(h, r, c)) continue;
      if (descend(h, r - 1, c)) return true;
      h.remove_edge(edges_[c]);
    }
    return false;
  }

  bool try_leaf(Graph& h, std::size_t) {
    for (Vertex v = 0; v < g_.order(); ++v)
      if (static_cast<int>(h.degree(v)) < required_[v]) return false;
    return percolates(g_, f_, h);
  }

  void record(const Graph& h, std::size_t branch_id) {
    std::lock_guard lock(shared_.mutex);
    if (branch_id < shared_.found_branch) {
      shared_.found_branch = branch_id;
      shared_.found = h;
    }
    std::size_t cur = shared_.best_branch.load();
    while (branch_id < cur && !shared_.best_branch.compare_exchange_weak(cur, branch_id)) {
    }
  }
};

// Once the value is known both bounds collapse onto it.
WsatResult finish_exact(const Graph& g, const Pattern& f, Graph h, std::uint64_t nodes) {
  WsatResult r;
  r.exact = static_cast<std::int64_t>(h.size());
  r.lower = *r.exact;
  r.upper = *r.exact;
  r.method = Method::exact_search;
  r.nodes = nodes;
  ClosureResult c = closure(g, f, h);
  r.certificate = Certificate{std::move(h), std::move(c.trace)};
  return r;
}

}  // namespace

WsatResult wsat_exact(const Graph& g, const Pattern& f, const SearchBudget& budget) {
  SolveOptions options;
  options.budget = budget;
  return wsat_exact(g, f, options);
}

WsatResult wsat_exact(const Graph& g, const Pattern& f, const SolveOptions& options) {
  if (!contains_copy(g, f)) {
    // Nothing can ever be added, so the host itself is the only candidate.
    return finish_exact(g, f, g, 0);
  }
  if (f.s() > kMaxPatternVertices)
    throw ParameterError("exact search supports patterns with at most " +
                         std::to_string(kMaxPatternVertices) + " vertices");
  if (options.budget.max_nodes == 0 || !(options.budget.max_seconds > 0))
    throw ParameterError("search budget must be positive");

  const auto start = Clock::now();
  const std::int64_t lower = lower_bound_general(g, f);
  WsatResult greedy = best_greedy(g, f, options.greedy_seed, std::max<std::size_t>(1, options.greedy_repeats));
  const std::int64_t upper = greedy.upper;
  const std::vector<Edge> edges = g.edges();

  std::uint64_t nodes = 0;
  for (std::int64_t k = lower; k < upper; ++k) {
    SharedState shared;
    LevelSearch search(g, f, edges, static_cast<std::size_t>(k), options.budget, start, shared);
    const std::size_t workers = std::max<std::size_t>(1, options.workers);
    if (workers == 1) {
      search.run_worker(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&search, w, workers] { search.run_worker(w, workers); });
    }
    nodes += shared.nodes.load();
    if (shared.found) return finish_exact(g, f, std::move(*shared.found), nodes);
    if (shared.aborted) {
      WsatResult r;
      r.lower = k;
      r.upper = upper;
      r.method = Method::bound;
      r.status = SolveStatus::budget_exceeded;
      r.nodes = nodes;
      r.certificate = std::move(greedy.certificate);
      return r;
    }
  }

  // Every level below the greedy value is infeasible.
  WsatResult r;
  r.lower = r.upper = upper;
  r.exact = upper;
  r.method = Method::exact_search;
  r.nodes = nodes;
  r.certificate = std::move(greedy.certificate);
  return r;
}

}  // namespace wsat
