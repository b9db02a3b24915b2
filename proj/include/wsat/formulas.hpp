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
#include <string_view>
#include <vector>

#include "wsat/pattern.hpp"
#include "wsat/solver.hpp"

namespace wsat {

// Families with a known closed form for wsat(n, F) in the complete host.
enum class FormulaFamily {
  ks,   // K_s:       (s-2)n - C(s-1,2),                 n >= s >= 2
  ktt,  // K_{t,t}:   (t-1)n - C(t-1,2),                 n >= 3t-3, t >= 1
  kst,  // K_{s,t}:   [(s-1)(n-t+1)+C(t,2), (s-1)(n-s)+C(t,2)], 1 <= s < t, n >= s+t
  k2t,  // K_{2,t}:   n-1+C(t,2) if t even and n <= 2t-2, else n-2+C(t,2); t >= 3, n >= t+2
  k1t,  // K_{1,t}:   C(t,2),                            n >= t+1, t >= 1
};

std::optional<FormulaFamily> parse_formula_family(std::string_view name);
std::string_view to_string(FormulaFamily f);

struct FormulaQuery {
  FormulaFamily family = FormulaFamily::ks;
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
};

// Closed interval; a point value when lower == upper.
struct FormulaValue {
  std::int64_t lower = 0;
  std::int64_t upper = 0;

  bool exact() const noexcept { return lower == upper; }
  friend bool operator==(const FormulaValue&, const FormulaValue&) = default;
};

// Throws RangeError naming the violated constraint.
FormulaValue closed_form_wsat(const FormulaQuery& q);

std::int64_t binomial(std::int64_t n, std::int64_t k);

// (delta-1)(n-m) + wsat_m, valid for n >= m >= s-1.
std::int64_t upper_bound_from_core(std::int64_t n, const Pattern& f, std::int64_t m, std::int64_t wsat_m);

// (delta-1)n + (s-1)(s-2 delta)/2, valid for n >= s-1.
std::int64_t upper_bound_from_small_core(std::int64_t n, const Pattern& f);

// upper_bound_from_core when m and wsat_m are both given, upper_bound_from_small_core otherwise.
std::int64_t generic_upper_bounds(std::int64_t n, const Pattern& f,
                                  std::optional<std::int64_t> m = std::nullopt,
                                  std::optional<std::int64_t> wsat_m = std::nullopt);

// ceil(t - 1 + (delta-1)(n-s)/2) for the complete host, n >= s.
std::int64_t complete_host_lower_bound(std::int64_t n, const Pattern& f);

struct PhiEntry {
  std::size_t n = 0;
  std::int64_t wsat = 0;
  std::int64_t phi = 0;  // wsat(n,F) - (delta-1)n
};

// phi(n) over s-1 <= n <= n_max. d_F and k are read off the scanned range
// only and are desk-scale estimates: constancy past n_max is not certified.
struct StabilityProfile {
  std::size_t delta = 0;
  std::vector<PhiEntry> phi_table;
  std::optional<std::int64_t> d_f;  // phi(n_max)
  std::optional<std::size_t> k;     // phi(n) == d_F for every scanned n >= k
  bool non_increasing = true;
  bool complete = true;             // false when the search budget ran out
  std::optional<std::size_t> stopped_at;
};

StabilityProfile stability_profile(const Pattern& f, std::size_t n_max,
                                   const SolveOptions& options = {});

}  // namespace wsat
