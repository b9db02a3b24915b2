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

#include <json.hpp>

#include "wsat/bootstrap.hpp"
#include "wsat/constructions.hpp"
#include "wsat/experiment.hpp"
#include "wsat/formulas.hpp"
#include "wsat/graph.hpp"
#include "wsat/solver.hpp"

namespace wsat::io {

using nlohmann::json;

// {"n": N, "edges": [[u,v], ...]} with edges in lexicographic order.
json graph_to_json(const Graph& g);
// Throws ParseError on malformed input.
Graph graph_from_json(const json& j);

// [{"edge": [u,v], "witness": [x_0, ..., x_{s-1}]}, ...]
json trace_to_json(const ActivationTrace& trace);
ActivationTrace trace_from_json(const json& j);

json closure_to_json(const Graph& seed, const ClosureResult& r);
json wsat_to_json(const WsatResult& r);
WsatResult wsat_from_json(const json& j);
json formula_to_json(const FormulaQuery& q, const FormulaValue& v);
json profile_to_json(const StabilityProfile& p);
json construction_to_json(const Construction& c);
json neighborhood_to_json(const NeighborhoodReport& r);
json experiment_to_json(const ExperimentReport& r);

}  // namespace wsat::io
