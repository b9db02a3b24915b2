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


#include "wsat/random.hpp"

#include <cmath>

#include "wsat/errors.hpp"

namespace wsat {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(Seed seed) noexcept {
  return splitmix64(splitmix64(seed.master) ^ splitmix64(seed.stream + 0x9E3779B97F4A7C15ULL));
}

Graph sample_gnp(std::size_t n, double p, Seed seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("sample_gnp: p must lie in [0,1]");
  Graph g(n);
  Rng rng(seed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) g.add_edge({u, v});
  return g;
}

}  // namespace wsat
