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


#include "wsat/formulas.hpp"

#include "wsat/errors.hpp"
#include "wsat/family.hpp"

namespace wsat {

std::optional<FormulaFamily> parse_formula_family(std::string_view name) {
  if (name == "ks") return FormulaFamily::ks;
  if (name == "ktt") return FormulaFamily::ktt;
  if (name == "kst") return FormulaFamily::kst;
  if (name == "k2t") return FormulaFamily::k2t;
  if (name == "k1t") return FormulaFamily::k1t;
  return std::nullopt;
}

std::string_view to_string(FormulaFamily f) {
  switch (f) {
    case FormulaFamily::ks: return "ks";
    case FormulaFamily::ktt: return "ktt";
    case FormulaFamily::kst: return "kst";
    case FormulaFamily::k2t: return "k2t";
    case FormulaFamily::k1t: return "k1t";
  }
  return "unknown";
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void require(bool ok, const std::string& constraint) {
  if (!ok) throw RangeError("formula outside its validity range: requires " + constraint);
}

}  // namespace

FormulaValue closed_form_wsat(const FormulaQuery& q) {
  const std::int64_t n = q.n, s = q.s, t = q.t;
  switch (q.family) {
    case FormulaFamily::ks: {
      require(s >= 2, "s >= 2");
      require(n >= s, "n >= s");
      const std::int64_t v = (s - 2) * n - binomial(s - 1, 2);
      return {v, v};
    }
    case FormulaFamily::ktt: {
      require(t >= 1, "t >= 1");
      require(n >= 3 * t - 3 && n >= 2, "n >= 3t-3");
      const std::int64_t v = (t - 1) * n - binomial(t - 1, 2);
      return {v, v};
    }
    case FormulaFamily::kst: {
      require(s >= 1, "s >= 1");
      require(t > s, "t > s");
      require(n >= s + t, "n >= s+t");
      return {(s - 1) * (n - t + 1) + binomial(t, 2), (s - 1) * (n - s) + binomial(t, 2)};
    }
    case FormulaFamily::k2t: {
      require(t >= 3, "t >= 3");
      require(n >= t + 2, "n >= t+2");
      const std::int64_t v =
          (t % 2 == 0 && n <= 2 * t - 2) ? n - 1 + binomial(t, 2) : n - 2 + binomial(t, 2);
      return {v, v};
    }
    case FormulaFamily::k1t: {
      require(t >= 1, "t >= 1");
      require(n >= t + 1, "n >= t+1");
      const std::int64_t v = binomial(t, 2);
      return {v, v};
    }
  }
  throw RangeError("unknown formula family");
}

std::int64_t upper_bound_from_core(std::int64_t n, const Pattern& f, std::int64_t m, std::int64_t wsat_m) {
  const auto s = static_cast<std::int64_t>(f.s());
  if (m < s - 1) throw RangeError("upper bound requires m >= s-1");
  if (n < m) throw RangeError("upper bound requires n >= m");
  return (static_cast<std::int64_t>(f.delta()) - 1) * (n - m) + wsat_m;
}

std::int64_t upper_bound_from_small_core(std::int64_t n, const Pattern& f) {
  const auto s = static_cast<std::int64_t>(f.s());
  const auto d = static_cast<std::int64_t>(f.delta());
  if (n < s - 1) throw RangeError("upper bound requires n >= s-1");
  // (s-1)(s-2d) is always even: s-1 is even when s is odd, s-2d when s is even.
  return (d - 1) * n + (s - 1) * (s - 2 * d) / 2;
}

std::int64_t generic_upper_bounds(std::int64_t n, const Pattern& f, std::optional<std::int64_t> m,
                                  std::optional<std::int64_t> wsat_m) {
  if (m.has_value() != wsat_m.has_value())
    throw ParameterError("the clique-size form needs both m and wsat(m,F)");
  return m ? upper_bound_from_core(n, f, *m, *wsat_m) : upper_bound_from_small_core(n, f);
}

std::int64_t complete_host_lower_bound(std::int64_t n, const Pattern& f) {
  const auto s = static_cast<std::int64_t>(f.s());
  if (n < s) throw RangeError("lower bound requires n >= s");
  const std::int64_t twice =
      2 * (static_cast<std::int64_t>(f.t()) - 1) + (static_cast<std::int64_t>(f.delta()) - 1) * (n - s);
  return (twice + 1) / 2;
}

StabilityProfile stability_profile(const Pattern& f, std::size_t n_max, const SolveOptions& options) {
  const std::size_t first = std::max<std::size_t>(1, f.s() - 1);
  if (n_max < first)
    throw ParameterError("profile needs n_max >= s-1 = " + std::to_string(first));

  StabilityProfile profile;
  profile.delta = f.delta();
  for (std::size_t n = first; n <= n_max; ++n) {
    const Graph host = build_named_graph(GraphFamily::complete(n));
    const WsatResult r = wsat_exact(host, f, options);
    if (!r.exact) {
      profile.complete = false;
      profile.stopped_at = n;
      break;
    }
    const std::int64_t phi =
        *r.exact - (static_cast<std::int64_t>(f.delta()) - 1) * static_cast<std::int64_t>(n);
    if (!profile.phi_table.empty() && phi > profile.phi_table.back().phi) profile.non_increasing = false;
    profile.phi_table.push_back({n, *r.exact, phi});
  }
  if (!profile.phi_table.empty()) {
    profile.d_f = profile.phi_table.back().phi;
    // start of the final run on which phi stays at d_F
    std::size_t i = profile.phi_table.size();
    while (i > 0 && profile.phi_table[i - 1].phi == *profile.d_f) --i;
    profile.k = profile.phi_table[i].n;
  }
  return profile;
}

}  // namespace wsat
