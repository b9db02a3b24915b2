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


#include "wsat/family.hpp"

#include "wsat/errors.hpp"

namespace wsat {

Graph build_named_graph(const GraphFamily& fam) {
  auto positive = [&](std::size_t x, const char* what) {
    if (x == 0) throw ParameterError(to_string(fam) + ": " + what + " must be positive");
  };
  switch (fam.kind) {
    case FamilyKind::complete: {
      positive(fam.a, "n");
      Graph g(fam.a);
      for (Vertex u = 0; u < fam.a; ++u)
        for (Vertex v = u + 1; v < fam.a; ++v) g.add_edge({u, v});
      return g;
    }
    case FamilyKind::complete_bipartite: {
      positive(fam.a, "a");
      positive(fam.b, "b");
      Graph g(fam.a + fam.b);
      for (Vertex u = 0; u < fam.a; ++u)
        for (Vertex v = static_cast<Vertex>(fam.a); v < fam.a + fam.b; ++v) g.add_edge({u, v});
      return g;
    }
    case FamilyKind::star: {
      positive(fam.a, "t");
      Graph g(fam.a + 1);
      for (Vertex v = 1; v <= fam.a; ++v) g.add_edge({0, v});
      return g;
    }
    case FamilyKind::path: {
      positive(fam.a, "n");
      Graph g(fam.a);
      for (Vertex v = 1; v < fam.a; ++v) g.add_edge({v - 1, v});
      return g;
    }
    case FamilyKind::cycle: {
      if (fam.a < 3) throw ParameterError(to_string(fam) + ": cycle needs n >= 3");
      Graph g(fam.a);
      for (Vertex v = 1; v < fam.a; ++v) g.add_edge({v - 1, v});
      g.add_edge({0, static_cast<Vertex>(fam.a - 1)});
      return g;
    }
    case FamilyKind::empty:
      positive(fam.a, "n");
      return Graph(fam.a);
    case FamilyKind::matching: {
      positive(fam.a, "k");
      Graph g(2 * fam.a);
      for (Vertex i = 0; i < fam.a; ++i) g.add_edge({2 * i, 2 * i + 1});
      return g;
    }
  }
  throw ParameterError("unknown graph family");
}

std::string to_string(const GraphFamily& fam) {
  auto one = [&](const char* name) { return std::string(name) + "(" + std::to_string(fam.a) + ")"; };
  switch (fam.kind) {
    case FamilyKind::complete: return one("complete");
    case FamilyKind::complete_bipartite:
      return "complete_bipartite(" + std::to_string(fam.a) + "," + std::to_string(fam.b) + ")";
    case FamilyKind::star: return one("star");
    case FamilyKind::path: return one("path");
    case FamilyKind::cycle: return one("cycle");
    case FamilyKind::empty: return one("empty");
    case FamilyKind::matching: return one("matching");
  }
  return "unknown";
}

}  // namespace wsat
