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


#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wsat/bootstrap.hpp"
#include "wsat/codec.hpp"
#include "wsat/errors.hpp"
#include "wsat/family.hpp"
#include "wsat/random.hpp"

namespace {

using namespace wsat;

Pattern named(GraphFamily fam) { return normalize_pattern(build_named_graph(fam)); }

// Spanning subgraph of host keeping each edge with probability q.
Graph thin(const Graph& host, double q, Seed seed) {
  Rng rng(seed);
  Graph h(host.order());
  for (const Edge& e : host.edges())
    if (rng.uniform() < q) h.add_edge(e);
  return h;
}

std::vector<Pattern> small_patterns() {
  return {named(GraphFamily::complete(3)), named(GraphFamily::complete(4)), named(GraphFamily::cycle(4)),
          named(GraphFamily::path(4)),     named(GraphFamily::star(3)),     named(GraphFamily::matching(2)),
          named(GraphFamily::path(5)),     named(GraphFamily::complete_bipartite(2, 3))};
}

TEST(closure, star_seed_completes_k4_for_triangles) {
  const Graph host = build_named_graph(GraphFamily::complete(4));
  const Graph seed = build_named_graph(GraphFamily::star(3));
  const ClosureResult r = closure(host, named(GraphFamily::complete(3)), seed);
  EXPECT_TRUE(r.percolates);
  EXPECT_EQ(r.trace.steps.size(), 3U);
  EXPECT_TRUE(verify_trace(host, named(GraphFamily::complete(3)), seed, r.trace));
}

TEST(closure, matches_full_rescan_oracle) {
  std::uint64_t s = 0;
  for (const Pattern& f : small_patterns()) {
    for (int i = 0; i < 12; ++i, ++s) {
      const Graph host = sample_gnp(4 + s % 4, 0.75, {s, 0});
      const Graph seed = thin(host, 0.45, {s, 1});
      const Graph expect = oracle::closure(host, f.graph(), seed);
      const ClosureResult r = closure(host, f, seed);
      EXPECT_EQ(r.closure, expect) << "host\n" << encode_edge_list(host) << "\nseed\n" << encode_edge_list(seed);
      EXPECT_EQ(r.percolates, expect == host);
      EXPECT_EQ(percolates(host, f, seed), expect == host);
      EXPECT_EQ(replay(seed, r.trace), r.closure);
      EXPECT_TRUE(verify_trace(host, f, seed, r.trace));
    }
  }
}

TEST(closure, long_paths_reach_beyond_max_degree) {
  // a P_5 copy through a new edge can end three steps away from it
  const Pattern p5 = named(GraphFamily::path(5));
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph host = sample_gnp(7, 0.6, {s, 40});
    const Graph seed = thin(host, 0.5, {s, 41});
    EXPECT_EQ(closure(host, p5, seed).closure, oracle::closure(host, p5.graph(), seed));
  }
}

TEST(closure, idempotent_monotone_and_order_free) {
  std::uint64_t s = 100;
  for (const Pattern& f : small_patterns()) {
    for (int i = 0; i < 10; ++i, ++s) {
      const Graph host = sample_gnp(5 + s % 4, 0.7, {s, 0});
      const Graph small = thin(host, 0.3, {s, 1});
      const Graph big = edge_union(small, thin(host, 0.3, {s, 2}));
      const Graph c_small = closure(host, f, small).closure;
      const Graph c_big = closure(host, f, big).closure;
      EXPECT_EQ(closure(host, f, c_small).closure, c_small);
      EXPECT_TRUE(c_small.is_spanning_subgraph_of(c_big));
      for (std::uint64_t order = 0; order < 5; ++order) {
        const ClosureResult r = closure(host, f, small, {.record_trace = true, .scan_seed = order});
        EXPECT_EQ(r.closure, c_small);
        EXPECT_TRUE(verify_trace(host, f, small, r.trace));
      }
    }
  }
}

TEST(closure, rejects_non_spanning_seed) {
  const Graph host = build_named_graph(GraphFamily::path(4));
  Graph seed(4);
  seed.add_edge({0, 3});
  EXPECT_THROW(closure(host, named(GraphFamily::complete(3)), seed), PreconditionError);
  EXPECT_THROW(closure(host, named(GraphFamily::complete(3)), Graph(5)), PreconditionError);
}

TEST(closure, weak_saturation_requires_freeness) {
  const Graph k4 = build_named_graph(GraphFamily::complete(4));
  const Pattern k3 = named(GraphFamily::complete(3));
  EXPECT_TRUE(is_weakly_saturated(k4, k3, build_named_graph(GraphFamily::star(3))));
  EXPECT_TRUE(is_weakly_saturated(k4, k3, build_named_graph(GraphFamily::path(4))));
  // percolates but contains a triangle
  Graph tri_plus(4);
  tri_plus.add_edge({0, 1});
  tri_plus.add_edge({1, 2});
  tri_plus.add_edge({0, 2});
  tri_plus.add_edge({2, 3});
  EXPECT_TRUE(percolates(k4, k3, tri_plus));
  EXPECT_FALSE(is_weakly_saturated(k4, k3, tri_plus));
  EXPECT_FALSE(is_weakly_saturated(k4, k3, build_named_graph(GraphFamily::matching(2))));
}

TEST(closure, trace_check_names_the_first_bad_step) {
  const Graph host = build_named_graph(GraphFamily::complete(4));
  const Pattern k3 = named(GraphFamily::complete(3));
  const Graph seed = build_named_graph(GraphFamily::star(3));
  ActivationTrace t = closure(host, k3, seed).trace;
  ASSERT_EQ(t.steps.size(), 3U);
  t.steps[1].witness.mapping = {1, 2, 3};
  const TraceCheck c = verify_trace(host, k3, seed, t);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.first_failure, 1U);
  EXPECT_FALSE(c.reason.empty());
  // truncated trace leaves edges missing
  ActivationTrace short_trace = closure(host, k3, seed).trace;
  short_trace.steps.pop_back();
  EXPECT_TRUE(verify_trace(host, k3, seed, short_trace).ok);
  EXPECT_NE(replay(seed, short_trace), host);
}

}  // namespace
