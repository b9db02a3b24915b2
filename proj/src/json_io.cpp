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


#include "wsat/json_io.hpp"

#include "wsat/errors.hpp"

namespace wsat::io {
namespace {

Edge edge_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
    throw ParseError(0, "edge must be a pair of non-negative integers");
  return Edge(j[0].get<Vertex>(), j[1].get<Vertex>());
}

template <class T>
json opt(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

json aggregate_to_json(const PAggregate& a) {
  return {{"p", a.p},
          {"trials", a.trials},
          {"budget_exceeded", a.budget_exceeded},
          {"mean_edges", a.mean_edges},
          {"mean_x_f", a.mean_x_f},
          {"mean_ratio", a.mean_ratio},
          {"fraction_equal", opt(a.fraction_equal)},
          {"fraction_contains", opt(a.fraction_contains)},
          {"mean_fraction_large", opt(a.mean_fraction_large)},
          {"mean_fraction_clique", opt(a.mean_fraction_clique)}};
}

json record_to_json(const TrialRecord& r) {
  json j = {{"p", r.p},
            {"trial", r.trial},
            {"seed", r.seed},
            {"edges", r.edges},
            {"x_f", r.x_f},
            {"wsat_lower", opt(r.wsat_lower)},
            {"wsat_exact", opt(r.wsat_exact)},
            {"wsat_upper", opt(r.wsat_upper)},
            {"equal_to_complete", opt(r.equal_to_complete)},
            {"status", to_string(r.status)}};
  if (r.neighborhood) j["neighborhood"] = neighborhood_to_json(*r.neighborhood);
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_unsigned() ||
      !j["edges"].is_array())
    throw ParseError(0, "graph must be an object with \"n\" and \"edges\"");
  std::vector<Edge> edges;
  for (const json& e : j["edges"]) edges.push_back(edge_from_json(e));
  try {
    return Graph::from_edges(j["n"].get<std::size_t>(), edges);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

json trace_to_json(const ActivationTrace& trace) {
  json out = json::array();
  for (const ActivationStep& s : trace.steps)
    out.push_back({{"edge", {s.edge.u, s.edge.v}}, {"witness", s.witness.mapping}});
  return out;
}

ActivationTrace trace_from_json(const json& j) {
  if (!j.is_array()) throw ParseError(0, "trace must be an array");
  ActivationTrace t;
  for (const json& s : j) {
    if (!s.is_object() || !s.contains("edge") || !s.contains("witness") || !s["witness"].is_array())
      throw ParseError(0, "trace step must hold \"edge\" and \"witness\"");
    ActivationStep step{edge_from_json(s["edge"]), {}};
    for (const json& x : s["witness"]) {
      if (!x.is_number_unsigned()) throw ParseError(0, "witness entries must be vertices");
      step.witness.mapping.push_back(x.get<Vertex>());
    }
    t.steps.push_back(std::move(step));
  }
  return t;
}

json closure_to_json(const Graph& seed, const ClosureResult& r) {
  return {{"percolates", r.percolates},
          {"added", r.closure.size() - seed.size()},
          {"closure", graph_to_json(r.closure)},
          {"trace", trace_to_json(r.trace)}};
}

json wsat_to_json(const WsatResult& r) {
  json j = {{"lower", r.lower},
            {"upper", r.upper},
            {"exact", opt(r.exact)},
            {"method", to_string(r.method)},
            {"status", to_string(r.status)},
            {"nodes", r.nodes}};
  if (r.certificate)
    j["certificate"] = {{"h", graph_to_json(r.certificate->h)}, {"trace", trace_to_json(r.certificate->trace)}};
  else
    j["certificate"] = nullptr;
  return j;
}

WsatResult wsat_from_json(const json& j) {
  try {
    WsatResult r;
    r.lower = j.at("lower").get<std::int64_t>();
    r.upper = j.at("upper").get<std::int64_t>();
    if (!j.at("exact").is_null()) r.exact = j.at("exact").get<std::int64_t>();
    const auto method = j.at("method").get<std::string>();
    bool found = false;
    for (auto m : {Method::formula, Method::exact_search, Method::greedy, Method::bound})
      if (to_string(m) == method) r.method = m, found = true;
    if (!found) throw ParseError(0, "unknown method " + method);
    const auto status = j.at("status").get<std::string>();
    if (status == to_string(SolveStatus::complete)) r.status = SolveStatus::complete;
    else if (status == to_string(SolveStatus::budget_exceeded)) r.status = SolveStatus::budget_exceeded;
    else throw ParseError(0, "unknown status " + status);
    r.nodes = j.at("nodes").get<std::uint64_t>();
    if (!j.at("certificate").is_null())
      r.certificate = Certificate{graph_from_json(j["certificate"].at("h")),
                                  trace_from_json(j["certificate"].at("trace"))};
    return r;
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  }
}

json formula_to_json(const FormulaQuery& q, const FormulaValue& v) {
  json j = {{"family", to_string(q.family)}, {"n", q.n}, {"lower", v.lower}, {"upper", v.upper}};
  j["s"] = q.s;
  j["t"] = q.t;
  j["exact"] = v.exact() ? json(v.lower) : json(nullptr);
  return j;
}

json profile_to_json(const StabilityProfile& p) {
  json table = json::array();
  for (const PhiEntry& e : p.phi_table) table.push_back({{"n", e.n}, {"wsat", e.wsat}, {"phi", e.phi}});
  return {{"delta", p.delta},
          {"phi", std::move(table)},
          {"d_f", opt(p.d_f)},
          {"k", opt(p.k)},
          {"non_increasing", p.non_increasing},
          {"complete", p.complete},
          {"stopped_at", opt(p.stopped_at)}};
}

json construction_to_json(const Construction& c) {
  return {{"h", graph_to_json(c.h)},
          {"edges", c.h.size()},
          {"trace", trace_to_json(c.trace)},
          {"clique", c.clique},
          {"parts", c.parts},
          {"core_edges", c.core_edges},
          {"edge_bound", opt(c.edge_bound)}};
}

json neighborhood_to_json(const NeighborhoodReport& r) {
  return {{"k", r.k},
          {"threshold", r.threshold},
          {"total_subsets", r.total_subsets},
          {"checked", r.checked},
          {"sampled", r.sampled},
          {"fraction_large", r.fraction_large},
          {"fraction_clique", opt(r.fraction_clique)}};
}

json experiment_to_json(const ExperimentReport& r) {
  json records = json::array();
  for (const TrialRecord& t : r.records) records.push_back(record_to_json(t));
  json aggregates = json::array();
  for (const PAggregate& a : r.aggregates) aggregates.push_back(aggregate_to_json(a));
  return {{"mode", to_string(r.mode)},
          {"n", r.n},
          {"master_seed", r.master_seed},
          {"p_grid", r.p_grid},
          {"complete_wsat", opt(r.complete_wsat)},
          {"marker_m", opt(r.marker_m)},
          {"marker_mu", opt(r.marker_mu)},
          {"records", std::move(records)},
          {"aggregates", std::move(aggregates)}};
}

}  // namespace wsat::io
