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
#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "wsat/graph.hpp"

namespace wsat {

// A master seed plus a stream index. Streams are decorrelated by hashing
// (master, stream) with SplitMix64 before seeding the engine.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const Seed&, const Seed&) = default;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// derive(m, s) = splitmix64(splitmix64(m) ^ splitmix64(s + 0x9E3779B97F4A7C15)).
std::uint64_t derive_seed(Seed seed) noexcept;

// std::mt19937_64 (fully specified by the standard) seeded with derive_seed.
// Distributions are hand-rolled because the standard ones are
// implementation-defined; every output here is identical on all platforms.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(derive_seed(seed)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  template <class T>
  void shuffle(std::span<T> xs) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// G(n,p): pairs (u,v), u < v, visited in lexicographic order; each is kept
// iff uniform() < p.
Graph sample_gnp(std::size_t n, double p, Seed seed);

}  // namespace wsat
