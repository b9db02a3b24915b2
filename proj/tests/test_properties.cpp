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
#include "wsat/codec.hpp"
#include "wsat/constructions.hpp"
#include "wsat/density.hpp"
#include "wsat/errors.hpp"
#include "wsat/family.hpp"
#include "wsat/formulas.hpp"
#include "wsat/random.hpp"
#include "wsat/solver.hpp"

namespace {

using namespace wsat;

Pattern named(GraphFamily fam) { return normalize_pattern(build_named_graph(fam)); }
Graph kn(std::size_t n) { return build_named_graph(GraphFamily::complete(n)); }

std::vector<GraphFamily> families() {
  return {GraphFamily::complete(5),  GraphFamily::complete_bipartite(2, 3), GraphFamily::star(4),
          GraphFamily::path(6),      GraphFamily::cycle(7),                 GraphFamily::empty(3),
          GraphFamily::matching(3)};
}

TEST(properties, sampled_and_constructed_graphs_are_valid) {
  for (const auto& fam : families()) EXPECT_TRUE(is_valid(build_named_graph(fam))) << to_string(fam);
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng({s, 99});
    const std::size_t n = 1 + rng.below(30);
    const double p = rng.uniform();
    const Graph g = sample_gnp(n, p, {s, 0});
    EXPECT_TRUE(is_valid(g));
    EXPECT_EQ(g, sample_gnp(n, p, {s, 0}));
    EXPECT_EQ(decode_edge_list(encode_edge_list(g)), g);
  }
  for (const auto& fam : families()) {
    const Graph g = build_named_graph(fam);
    EXPECT_EQ(decode_edge_list(encode_edge_list(g)), g);
  }
}

TEST(properties, density_lower_bounds) {
  for (std::uint64_t s = 0; s < 80; ++s) {
    const Graph g = sample_gnp(2 + s % 10, 0.4, {s, 21});
    if (g.size() == 0) continue;
    EXPECT_GE(density_m(g), Rational(static_cast<std::int64_t>(g.size()), static_cast<std::int64_t>(g.order())));
    if (g.order() >= 3) EXPECT_GE(density_mu(g), density_m(g));
  }
}

TEST(properties, copy_counts_grow_with_the_host) {
  const std::vector<Pattern> fs{named(GraphFamily::complete(3)), named(GraphFamily::path(3)),
                                named(GraphFamily::cycle(4)), named(GraphFamily::star(3))};
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph small = sample_gnp(6, 0.4, {s, 31});
    const Graph big = edge_union(small, sample_gnp(6, 0.3, {s, 32}));
    for (const Pattern& f : fs) {
      EXPECT_LE(count_copies(small, f), count_copies(big, f));
      EXPECT_EQ(contains_copy(small, f), count_copies(small, f) >= 1);
    }
  }
}

TEST(properties, single_edge_pattern_needs_no_seed_edges) {
  const Pattern k2 = named(GraphFamily::complete(2));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph host = sample_gnp(8, 0.5, {s, 41});
    EXPECT_TRUE(percolates(host, k2, Graph(8)));
    EXPECT_EQ(wsat_exact(host, k2).exact, 0);
  }
}

TEST(properties, exact_search_matches_unpruned_oracle_on_complete_hosts) {
  const std::vector<Pattern> fs{named(GraphFamily::complete(3)), named(GraphFamily::complete(4)),
                                named(GraphFamily::star(2)), named(GraphFamily::star(3)),
                                named(GraphFamily::path(3))};
  for (std::size_t n = 4; n <= 6; ++n)
    for (const Pattern& f : fs) {
      const WsatResult r = wsat_exact(kn(n), f);
      EXPECT_EQ(*r.exact, oracle::wsat(kn(n), f.graph())) << "n=" << n << " s=" << f.s();
      EXPECT_TRUE(is_weakly_saturated(kn(n), f, r.certificate->h));
    }
}

TEST(properties, min_degree_two_patterns_need_a_connected_amount) {
  Graph k4_minus = kn(4);
  k4_minus.remove_edge({2, 3});
  const std::vector<Pattern> fs{named(GraphFamily::cycle(4)), named(GraphFamily::cycle(5)),
                                normalize_pattern(k4_minus), named(GraphFamily::complete_bipartite(2, 3))};
  for (const Pattern& f : fs) {
    ASSERT_EQ(f.delta(), 2U);
    for (std::size_t n = f.s(); n <= 6; ++n)
      EXPECT_GE(*wsat_exact(kn(n), f).exact, static_cast<std::int64_t>(n) - 1) << "n=" << n << " s=" << f.s();
  }
}

TEST(properties, closed_forms_equal_exact_search_up_to_six) {
  for (std::int64_t n = 2; n <= 6; ++n) {
    for (std::int64_t s = 2; s <= n && s <= 5; ++s)
      EXPECT_EQ(closed_form_wsat({FormulaFamily::ks, n, s, 0}).lower,
                *wsat_exact(kn(static_cast<std::size_t>(n)), named(GraphFamily::complete(static_cast<std::size_t>(s)))).exact);
    for (std::int64_t t = 1; t + 1 <= n; ++t)
      EXPECT_EQ(closed_form_wsat({FormulaFamily::k1t, n, 1, t}).lower,
                *wsat_exact(kn(static_cast<std::size_t>(n)), named(GraphFamily::star(static_cast<std::size_t>(t)))).exact);
    for (std::int64_t t = 1; 3 * t - 3 <= n && 2 * t <= n; ++t)
      EXPECT_EQ(closed_form_wsat({FormulaFamily::ktt, n, t, t}).lower,
                *wsat_exact(kn(static_cast<std::size_t>(n)),
                            named(GraphFamily::complete_bipartite(static_cast<std::size_t>(t), static_cast<std::size_t>(t))))
                     .exact);
  }
  EXPECT_EQ(closed_form_wsat({FormulaFamily::k2t, 5, 2, 3}).lower,
            *wsat_exact(kn(5), named(GraphFamily::complete_bipartite(2, 3))).exact);
  EXPECT_EQ(closed_form_wsat({FormulaFamily::k2t, 6, 2, 3}).lower,
            *wsat_exact(kn(6), named(GraphFamily::complete_bipartite(2, 3))).exact);
}

TEST(properties, greedy_reaches_the_complete_host_value_for_triangles) {
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::uint64_t s = 0; s < 10; ++s)
      EXPECT_EQ(greedy_upper_bound(kn(n), named(GraphFamily::complete(3)), {s, 0}).upper,
                static_cast<std::int64_t>(n) - 1);
}

TEST(worked_examples, matcher) {
  Graph g = build_named_graph(GraphFamily::star(3));
  g.add_edge({1, 2});
  const auto w = copy_through_edge(g, named(GraphFamily::complete(3)), {1, 2});
  ASSERT_TRUE(w);
  auto vs = w->mapping;
  std::sort(vs.begin(), vs.end());
  EXPECT_EQ(vs, (std::vector<Vertex>{0, 1, 2}));
  const Graph p3 = build_named_graph(GraphFamily::path(3));
  EXPECT_FALSE(copy_through_edge(p3, named(GraphFamily::complete(3)), {0, 1}));
  const Pattern k13 = named(GraphFamily::star(3));
  const auto centre = copy_through_edge(kn(4), k13, {0, 1});
  ASSERT_TRUE(centre);
  EXPECT_TRUE(is_valid_copy(kn(4), k13, *centre, Edge{0, 1}));
  EXPECT_EQ(count_copies(kn(4), named(GraphFamily::path(3))), 12U);
  EXPECT_EQ(count_copies(kn(4), named(GraphFamily::complete(3))), 4U);
  EXPECT_TRUE(contains_copy(build_named_graph(GraphFamily::cycle(6)), named(GraphFamily::path(3))));
  EXPECT_FALSE(contains_copy(build_named_graph(GraphFamily::star(5)), named(GraphFamily::complete(3))));
  EXPECT_EQ(named(GraphFamily::path(3)).aut(), 2U);
  EXPECT_EQ(k13.aut(), 6U);
  Graph padded(5);
  padded.add_edge({0, 1});
  padded.add_edge({1, 2});
  padded.add_edge({0, 2});
  const Pattern k3 = normalize_pattern(padded);
  EXPECT_EQ(k3.s(), 3U);
  EXPECT_EQ(k3.t(), 3U);
  EXPECT_EQ(k3.delta(), 2U);
}

TEST(worked_examples, closure_and_traces) {
  const Pattern k3 = named(GraphFamily::complete(3));
  const Graph m = build_named_graph(GraphFamily::matching(2));
  const ClosureResult r = closure(kn(4), k3, m);
  EXPECT_EQ(r.closure, m);
  EXPECT_FALSE(r.percolates);
  const Graph c6 = build_named_graph(GraphFamily::cycle(6));
  EXPECT_EQ(closure(c6, k3, build_named_graph(GraphFamily::path(6))).closure, build_named_graph(GraphFamily::path(6)));
  EXPECT_TRUE(verify_trace(kn(4), k3, kn(4), ActivationTrace{}));
  // a host where the third activation needs the first
  Graph host(5);
  for (Edge e : {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}, Edge{1, 3}, Edge{2, 3}, Edge{3, 4}, Edge{2, 4}}) host.add_edge(e);
  Graph seed(5);
  for (Edge e : {Edge{0, 1}, Edge{0, 2}, Edge{1, 3}, Edge{3, 4}}) seed.add_edge(e);
  const ClosureResult full = closure(host, k3, seed);
  ASSERT_TRUE(full.percolates);
  ASSERT_EQ(full.trace.steps.size(), 3U);
  EXPECT_TRUE(verify_trace(host, k3, seed, full.trace));
  ActivationTrace swapped = full.trace;
  std::swap(swapped.steps[0], swapped.steps[2]);
  EXPECT_FALSE(verify_trace(host, k3, seed, swapped).ok);
}

TEST(worked_examples, solver_bounds) {
  EXPECT_EQ(lower_bound_general(kn(5), named(GraphFamily::complete(3))), 3);
  for (const Pattern& f : {named(GraphFamily::star(3)), named(GraphFamily::path(4))})
    EXPECT_EQ(lower_bound_general(kn(7), f), static_cast<std::int64_t>(f.t()) - 1);
  for (const Pattern& f : {named(GraphFamily::complete(4)), named(GraphFamily::cycle(5))})
    EXPECT_EQ(lower_bound_general(f.graph(), f), static_cast<std::int64_t>(f.t()) - 1);
  EXPECT_EQ(wsat_exact(kn(5), named(GraphFamily::complete(4))).exact, oracle::wsat(kn(5), kn(4)));
  EXPECT_EQ(greedy_upper_bound(kn(4), named(GraphFamily::complete(3)), {0, 0}).upper, 3);
  const Graph c5 = build_named_graph(GraphFamily::cycle(5));
  EXPECT_EQ(greedy_upper_bound(c5, named(GraphFamily::complete(3)), {0, 0}).upper, 5);
}

TEST(worked_examples, formulas_and_bounds) {
  EXPECT_EQ(closed_form_wsat({FormulaFamily::ks, 5, 3, 0}).lower, 4);
  EXPECT_EQ(closed_form_wsat({FormulaFamily::k2t, 9, 2, 3}).lower, 10);
  EXPECT_EQ(upper_bound_from_small_core(6, named(GraphFamily::complete(3))), 5);
  EXPECT_EQ(upper_bound_from_core(10, named(GraphFamily::star(3)), 4, 3), 3);
  EXPECT_EQ(upper_bound_from_small_core(9, named(GraphFamily::complete_bipartite(2, 3))), 11);
}

TEST(worked_examples, constructions) {
  const Construction a = construct_complete_host_saturator(6, named(GraphFamily::complete(4)), 2, kn(2));
  EXPECT_EQ(a.h.size(), 9U);
  const Graph k13_core = build_named_graph(GraphFamily::path(4));  // 3 edges, weakly (K_4, K_{1,3})-saturated
  const Construction b = construct_complete_host_saturator(10, named(GraphFamily::star(3)), 4, k13_core);
  EXPECT_EQ(b.h.size(), 3U);
  const Construction c = construct_complete_host_saturator(5, named(GraphFamily::complete(3)), 2, kn(2));
  EXPECT_EQ(c.h.size(), 4U);
  EXPECT_EQ(c.h.degree(0), 4U);

  const Construction d = construct_random_host_saturator(kn(8), named(GraphFamily::complete(3)), 2);
  EXPECT_EQ(d.h.size(), 7U);
  const Graph g20 = sample_gnp(20, 0.8, {1, 0});
  try {
    const Construction e = construct_random_host_saturator(g20, named(GraphFamily::complete(3)), 3, {1, 0});
    EXPECT_EQ(e.h.size(), 17U + e.core_edges);
  } catch (const ConstructionFailedError&) {
  }
  EXPECT_THROW(construct_random_host_saturator(build_named_graph(GraphFamily::complete_bipartite(3, 3)),
                                               named(GraphFamily::complete(3)), 3),
               StructureAbsentError);

  const Construction f = construct_clique_partition_saturator(kn(9), named(GraphFamily::complete(3)));
  EXPECT_TRUE(is_weakly_saturated(kn(9), named(GraphFamily::complete(3)), f.h));
  EXPECT_LE(static_cast<std::int64_t>(f.h.size()), *f.edge_bound);
  Graph two_k4(8);
  for (Vertex base : {0U, 4U})
    for (Vertex x = 0; x < 4; ++x)
      for (Vertex y = x + 1; y < 4; ++y) two_k4.add_edge({base + x, base + y});
  EXPECT_THROW(construct_clique_partition_saturator(two_k4, named(GraphFamily::complete(3))), StructureAbsentError);
  const Graph g30 = sample_gnp(30, 0.7, {2, 0});
  try {
    const Construction h = construct_clique_partition_saturator(g30, named(GraphFamily::complete(3)), {2, 0});
    EXPECT_LE(h.h.size(), g30.size());
    EXPECT_TRUE(is_weakly_saturated(g30, named(GraphFamily::complete(3)), h.h));
  } catch (const StructureAbsentError&) {
  } catch (const ConstructionFailedError&) {
  }
}

}  // namespace
