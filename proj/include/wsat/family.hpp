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

#include <cstddef>
#include <string>

#include "wsat/graph.hpp"

namespace wsat {

// Named graph families. Labelling is fixed so traces are reproducible:
//   complete(n)             vertices 0..n-1
//   complete_bipartite(a,b) parts {0..a-1} | {a..a+b-1}
//   star(t)                 centre 0, leaves 1..t (this is K_{1,t})
//   path(n)                 edges {i,i+1}
//   cycle(n)                path(n) plus {0,n-1}; n >= 3
//   empty(n)                no edges
//   matching(k)             2k vertices, edges {2i,2i+1}
enum class FamilyKind { complete, complete_bipartite, star, path, cycle, empty, matching };

struct GraphFamily {
  FamilyKind kind = FamilyKind::empty;
  std::size_t a = 0;
  std::size_t b = 0;

  static GraphFamily complete(std::size_t n) { return {FamilyKind::complete, n, 0}; }
  static GraphFamily complete_bipartite(std::size_t a, std::size_t b) {
    return {FamilyKind::complete_bipartite, a, b};
  }
  static GraphFamily star(std::size_t t) { return {FamilyKind::star, t, 0}; }
  static GraphFamily path(std::size_t n) { return {FamilyKind::path, n, 0}; }
  static GraphFamily cycle(std::size_t n) { return {FamilyKind::cycle, n, 0}; }
  static GraphFamily empty(std::size_t n) { return {FamilyKind::empty, n, 0}; }
  static GraphFamily matching(std::size_t k) { return {FamilyKind::matching, k, 0}; }
};

// Throws ParameterError for zero parameters or cycle(n < 3).
Graph build_named_graph(const GraphFamily& fam);

std::string to_string(const GraphFamily& fam);

}  // namespace wsat
