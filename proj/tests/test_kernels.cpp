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


#include <gtest/gtest.h>

#include <vector>

#include "wsat/kernels.hpp"
#include "wsat/random.hpp"

namespace {

using wsat::kernels::KernelTable;
using wsat::kernels::Word;

std::vector<const KernelTable*> simd_tables() {
  std::vector<const KernelTable*> out;
  if (auto* t = wsat::kernels::avx2_table()) out.push_back(t);
  if (auto* t = wsat::kernels::neon_table()) out.push_back(t);
  return out;
}

std::vector<Word> random_words(wsat::Rng& rng, std::size_t n, int density) {
  std::vector<Word> out(n);
  for (auto& w : out) {
    w = rng.next();
    // sparser or denser words exercise the nibble table edges
    for (int i = 0; i < density; ++i) w &= rng.next();
    for (int i = 0; i > density; --i) w |= rng.next();
  }
  return out;
}

std::size_t naive_popcount(const std::vector<Word>& a) {
  std::size_t n = 0;
  for (Word w : a)
    for (int b = 0; b < 64; ++b) n += (w >> b) & 1U;
  return n;
}

TEST(kernels, scalar_matches_naive_bit_loops) {
  const KernelTable& t = wsat::kernels::scalar_table();
  wsat::Rng rng({7, 0});
  for (std::size_t n = 0; n < 20; ++n) {
    const auto a = random_words(rng, n, 0);
    const auto b = random_words(rng, n, 0);
    EXPECT_EQ(t.popcount(a.data(), n), naive_popcount(a));
    std::vector<Word> both(n);
    for (std::size_t i = 0; i < n; ++i) both[i] = a[i] & b[i];
    EXPECT_EQ(t.and_popcount(a.data(), b.data(), n), naive_popcount(both));
    EXPECT_EQ(t.is_subset(both.data(), a.data(), n), true);
  }
}

TEST(kernels, simd_tables_match_scalar) {
  const KernelTable& ref = wsat::kernels::scalar_table();
  const auto tables = simd_tables();
  if (tables.empty()) GTEST_SKIP() << "no SIMD kernels on this CPU";
  wsat::Rng rng({11, 0});
  for (const KernelTable* t : tables) {
    for (std::size_t n = 0; n <= 37; ++n) {
      for (int density : {-2, 0, 2}) {
        const auto a = random_words(rng, n, density);
        auto b = random_words(rng, n, density);
        std::vector<Word> x(n), y(n);
        ref.and_words(x.data(), a.data(), b.data(), n);
        t->and_words(y.data(), a.data(), b.data(), n);
        EXPECT_EQ(x, y) << t->name << " and n=" << n;
        ref.or_words(x.data(), a.data(), b.data(), n);
        t->or_words(y.data(), a.data(), b.data(), n);
        EXPECT_EQ(x, y) << t->name << " or n=" << n;
        ref.andnot_words(x.data(), a.data(), b.data(), n);
        t->andnot_words(y.data(), a.data(), b.data(), n);
        EXPECT_EQ(x, y) << t->name << " andnot n=" << n;
        EXPECT_EQ(ref.popcount(a.data(), n), t->popcount(a.data(), n)) << t->name;
        EXPECT_EQ(ref.and_popcount(a.data(), b.data(), n), t->and_popcount(a.data(), b.data(), n)) << t->name;
        EXPECT_EQ(ref.is_subset(a.data(), b.data(), n), t->is_subset(a.data(), b.data(), n)) << t->name;
        // a subset pair with one stray bit in the last word
        std::vector<Word> sub(n);
        ref.and_words(sub.data(), a.data(), b.data(), n);
        EXPECT_TRUE(t->is_subset(sub.data(), b.data(), n));
        if (n > 0 && ~b[n - 1] != 0) {
          const Word outside = ~b[n - 1];
          sub[n - 1] |= outside & (0 - outside);
          EXPECT_FALSE(t->is_subset(sub.data(), b.data(), n)) << t->name << " n=" << n;
          EXPECT_FALSE(ref.is_subset(sub.data(), b.data(), n));
        }
      }
    }
  }
}

TEST(kernels, in_place_operands_are_allowed) {
  wsat::Rng rng({3, 0});
  for (const KernelTable* t : simd_tables()) {
    auto a = random_words(rng, 9, 0);
    const auto b = random_words(rng, 9, 0);
    auto ref = a;
    wsat::kernels::scalar_table().andnot_words(ref.data(), ref.data(), b.data(), 9);
    t->andnot_words(a.data(), a.data(), b.data(), 9);
    EXPECT_EQ(a, ref);
  }
}

TEST(kernels, active_table_is_one_of_the_known_tables) {
  const auto name = wsat::kernels::active().name;
  EXPECT_TRUE(name == "scalar" || name == "avx2" || name == "neon") << name;
}

}  // namespace
