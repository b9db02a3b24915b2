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

#include <cstdint>
#include <ostream>
#include <string>

#include "wsat/graph.hpp"
#include "wsat/random.hpp"

namespace wsat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Graph argument: complete:N, cbip:A,B, star:T, path:N, cycle:N, empty:N,
// matching:K, gnp:N,P (sampled with the given seed), or an edge-list file.
Graph parse_graph_spec(const std::string& spec, Seed seed);

// JSON payload to out (or --out FILE), one-line summary to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wsat::cli
