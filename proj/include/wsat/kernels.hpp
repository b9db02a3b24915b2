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

// Word-parallel bitset kernels. Every adjacency row, candidate set and vertex
// subset in the library is a span of 64-bit words; these are the inner loops
// of subgraph matching, closure ball growth and common-neighbourhood counts.
//
// A scalar reference table always exists. SIMD tables (AVX2 on x86-64, NEON
// on AArch64) are selected at runtime when the CPU supports them; the
// WSAT_KERNELS environment variable ("scalar", "avx2", "neon") overrides the
// choice. All tables compute bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace wsat::kernels {

using Word = std::uint64_t;
using Words = std::span<const Word>;
using MutWords = std::span<Word>;

struct KernelTable {
  std::string_view name;
  // dst = a & b
  void (*and_words)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // dst = a | b
  void (*or_words)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // dst = a & ~b
  void (*andnot_words)(Word* dst, const Word* a, const Word* b, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
  // popcount(a & b)
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  // (a & ~b) == 0
  bool (*is_subset)(const Word* a, const Word* b, std::size_t n);
};

const KernelTable& scalar_table();
// nullptr when the build target or the running CPU lacks the extension.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// The table used by the library. Resolved once on first use.
const KernelTable& active();

inline void and_words(MutWords dst, Words a, Words b) {
  active().and_words(dst.data(), a.data(), b.data(), dst.size());
}
inline void or_words(MutWords dst, Words a, Words b) {
  active().or_words(dst.data(), a.data(), b.data(), dst.size());
}
inline void andnot_words(MutWords dst, Words a, Words b) {
  active().andnot_words(dst.data(), a.data(), b.data(), dst.size());
}
inline std::size_t popcount(Words a) {
  return active().popcount(a.data(), a.size());
}
inline std::size_t and_popcount(Words a, Words b) {
  return active().and_popcount(a.data(), b.data(), a.size());
}
inline bool is_subset(Words a, Words b) {
  return active().is_subset(a.data(), b.data(), a.size());
}

}  // namespace wsat::kernels
