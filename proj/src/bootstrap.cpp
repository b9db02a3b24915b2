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


#include "wsat/bootstrap.hpp"

#include <deque>

#include "wsat/errors.hpp"
#include "wsat/random.hpp"

namespace wsat {
namespace {

class ClosureEngine {
 public:
  ClosureEngine(const Graph& host, const Pattern& f, const Graph& seed, bool record)
      : host_(host),
        f_(f),
        cur_(seed),
        record_(record),
        queued_(host.order() * host.words(), 0),
        ball_(host.words(), 0),
        frontier_(host.words(), 0),
        next_(host.words(), 0),
        missing_(host.words(), 0) {}

  void seed_queue(std::vector<Edge> initial) {
    for (const Edge& e : initial) push(e);
  }

  void run() {
    while (!queue_.empty()) {
      const Edge e = queue_.front();
      queue_.pop_front();
      clear_queued(e);
      if (cur_.has_edge(e)) continue;
      cur_.add_edge(e);
      if (record_) {
        auto witness = copy_through_edge(cur_, f_, e);
        if (!witness) {
          cur_.remove_edge(e);
          continue;
        }
        trace_.steps.push_back({e, std::move(*witness)});
      } else if (!has_copy_through_edge(cur_, f_, e)) {
        cur_.remove_edge(e);
        continue;
      }
      requeue_near(e);
    }
  }

  Graph take_graph() { return std::move(cur_); }
  ActivationTrace take_trace() { return std::move(trace_); }
  const Graph& graph() const { return cur_; }

 private:
  const Graph& host_;
  const Pattern& f_;
  Graph cur_;
  bool record_;
  ActivationTrace trace_;
  std::deque<Edge> queue_;
  std::vector<Word> queued_;  // n x words matrix, bit (u,v) for u < v
  std::vector<Word> ball_, frontier_, next_, missing_;

  bool is_queued(Edge e) const {
    return (queued_[e.u * host_.words() + e.v / 64] >> (e.v % 64)) & 1U;
  }
  void clear_queued(Edge e) { queued_[e.u * host_.words() + e.v / 64] &= ~(Word{1} << (e.v % 64)); }
  void push(Edge e) {
    if (is_queued(e)) return;
    queued_[e.u * host_.words() + e.v / 64] |= Word{1} << (e.v % 64);
    queue_.push_back(e);
  }

  void requeue_near(Edge e) {
    const std::size_t n = host_.order();
    std::fill(ball_.begin(), ball_.end(), 0);
    if (auto radius = f_.diameter()) {
      std::fill(frontier_.begin(), frontier_.end(), 0);
      frontier_[e.u / 64] |= Word{1} << (e.u % 64);
      frontier_[e.v / 64] |= Word{1} << (e.v % 64);
      kernels::or_words(ball_, ball_, frontier_);
      for (std::size_t step = 0; step < *radius; ++step) {
        std::fill(next_.begin(), next_.end(), 0);
        for_each_bit(std::span<const Word>(frontier_),
                     [&](std::size_t x) { kernels::or_words(next_, next_, cur_.row(static_cast<Vertex>(x))); });
        kernels::andnot_words(frontier_, next_, ball_);
        kernels::or_words(ball_, ball_, frontier_);
        bool empty = true;
        for (Word w : frontier_) empty = empty && w == 0;
        if (empty) break;
      }
    } else {
      for (std::size_t v = 0; v < n; ++v) ball_[v / 64] |= Word{1} << (v % 64);
    }
    for_each_bit(std::span<const Word>(ball_), [&](std::size_t x) {
      const auto vx = static_cast<Vertex>(x);
      kernels::andnot_words(missing_, host_.row(vx), cur_.row(vx));
      for_each_bit(std::span<const Word>(missing_),
                   [&](std::size_t y) { push(Edge(vx, static_cast<Vertex>(y))); });
    });
  }
};

std::vector<Edge> missing_edges(const Graph& host, const Graph& seed) {
  std::vector<Edge> out;
  for (const Edge& e : host.edges())
    if (!seed.has_edge(e)) out.push_back(e);
  return out;
}

void require_spanning(const Graph& host, const Graph& seed) {
  if (!seed.is_spanning_subgraph_of(host))
    throw PreconditionError("seed is not a spanning subgraph of the host");
}

}  // namespace

ClosureResult closure(const Graph& host, const Pattern& f, const Graph& seed,
                      const ClosureOptions& options) {
  require_spanning(host, seed);
  std::vector<Edge> initial = missing_edges(host, seed);
  if (options.scan_seed) {
    Rng rng(Seed{*options.scan_seed, 0});
    rng.shuffle(std::span<Edge>(initial));
  }
  ClosureEngine engine(host, f, seed, options.record_trace);
  engine.seed_queue(std::move(initial));
  engine.run();
  ClosureResult result;
  result.closure = engine.take_graph();
  result.trace = engine.take_trace();
  result.percolates = result.closure.size() == host.size();
  return result;
}

bool percolates(const Graph& host, const Pattern& f, const Graph& seed) {
  require_spanning(host, seed);
  ClosureEngine engine(host, f, seed, false);
  engine.seed_queue(missing_edges(host, seed));
  engine.run();
  return engine.graph().size() == host.size();
}

bool is_weakly_saturated(const Graph& host, const Pattern& f, const Graph& h) {
  require_spanning(host, h);
  return !contains_copy(h, f) && percolates(host, f, h);
}

TraceCheck verify_trace(const Graph& host, const Pattern& f, const Graph& seed,
                        const ActivationTrace& trace) {
  auto fail = [](std::optional<std::size_t> at, std::string why) {
    return TraceCheck{false, at, std::move(why)};
  };
  if (!seed.is_spanning_subgraph_of(host)) return fail(std::nullopt, "seed is not a spanning subgraph of host");
  Graph cur = seed;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ActivationStep& step = trace.steps[i];
    const Edge e = step.edge;
    if (e.u == e.v || e.v >= host.order()) return fail(i, "edge out of range");
    if (!host.has_edge(e)) return fail(i, "edge " + to_string(e) + " is not a host edge");
    if (cur.has_edge(e)) return fail(i, "edge " + to_string(e) + " already present");
    cur.add_edge(e);
    if (!is_valid_copy(cur, f, step.witness, e))
      return fail(i, "witness is not a copy of the pattern through " + to_string(e));
  }
  return {};
}

Graph replay(const Graph& seed, const ActivationTrace& trace) {
  Graph g = seed;
  for (const auto& step : trace.steps) g.add_edge(step.edge);
  return g;
}

}  // namespace wsat
