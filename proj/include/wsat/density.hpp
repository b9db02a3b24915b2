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

#include "wsat/graph.hpp"
#include "wsat/rational.hpp"

namespace wsat {

// Largest vertex count (after dropping isolated vertices) accepted by the
// subset enumeration in density_m.
inline constexpr std::size_t kMaxDensityVertices = 24;

// m(G) = max |E(H)|/|V(H)| over subgraphs H. Only induced subgraphs need to
// be considered; enumerates vertex subsets. Throws UndefinedDensityError for
// edgeless graphs and ParameterError above kMaxDensityVertices.
Rational density_m(const Graph& g);

// mu(G) = max{m(G), (|E|-1)/(|V|-2)} for |V| != 2, else m(G).
Rational density_mu(const Graph& g);

}  // namespace wsat
