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
#include <optional>
#include <string>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

struct ActivationStep {
  Edge edge;
  CopyWitness witness;

  friend bool operator==(const ActivationStep&, const ActivationStep&) = default;
};

// Ordered edge additions, each certified by a copy of F through the edge in
// the graph built so far.
struct ActivationTrace {
  std::vector<ActivationStep> steps;

  friend bool operator==(const ActivationTrace&, const ActivationTrace&) = default;
};

// The F-closure of a seed inside a host: the unique maximal graph reachable
// by adding host edges that each complete a new copy of F.
struct ClosureResult {
  Graph closure;
  ActivationTrace trace;
  bool percolates = false;  // closure == host
};

struct ClosureOptions {
  bool record_trace = true;
  // Shuffles the initial scan order of candidate edges. The closure edge set
  // never depends on it; the trace does.
  std::optional<std::uint64_t> scan_seed;
};

// Work-queue fixpoint. After an edge e is added only the missing host edges
// with an endpoint within diam(F) of e are re-queued; a copy through a
// candidate that uses e is connected, so nothing further away can change.
// Disconnected patterns re-queue every missing edge.
// Throws PreconditionError unless seed is a spanning subgraph of host.
ClosureResult closure(const Graph& host, const Pattern& f, const Graph& seed,
                      const ClosureOptions& options = {});

// closure(...).percolates without recording a trace.
bool percolates(const Graph& host, const Pattern& f, const Graph& seed);

// H is F-free and its closure in host is host.
bool is_weakly_saturated(const Graph& host, const Pattern& f, const Graph& h);

struct TraceCheck {
  bool ok = true;
  std::optional<std::size_t> first_failure;  // step index
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

// Independent replay of a trace from seed: every step's edge is a host edge
// not yet present and its witness is a valid copy of F containing the edge.
TraceCheck verify_trace(const Graph& host, const Pattern& f, const Graph& seed,
                        const ActivationTrace& trace);

// Graph obtained by replaying the trace edges on top of seed (no checks).
Graph replay(const Graph& seed, const ActivationTrace& trace);

}  // namespace wsat
