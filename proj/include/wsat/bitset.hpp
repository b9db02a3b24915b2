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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wsat/kernels.hpp"

namespace wsat {

using Word = kernels::Word;

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Calls f(index) for every set bit, ascending.
template <class F>
void for_each_bit(std::span<const Word> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    Word x = words[w];
    while (x) {
      f(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

// Fixed-width dynamic bitset used for vertex subsets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

  std::size_t bits() const noexcept { return bits_; }

  void set(std::size_t i) { words_[i / 64] |= Word{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(Word{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  void fill() {
    for (auto& w : words_) w = ~Word{0};
    if (bits_ % 64) words_.back() = (Word{1} << (bits_ % 64)) - 1;
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const { return kernels::popcount(words_); }
  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }

  template <class F>
  void for_each(F&& f) const {
    for_each_bit(words(), std::forward<F>(f));
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace wsat
