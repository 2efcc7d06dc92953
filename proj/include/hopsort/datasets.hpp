// Copyright 2026 The hopsort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
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
#include <string_view>
#include <vector>

#include "hopsort/list.hpp"

namespace hopsort {

// splitmix64. Bit-exact on every platform.
class Rng64 {
 public:
  explicit constexpr Rng64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Modulo reduction; the bias is irrelevant for the statistics gathered here.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

enum class DatasetKind { kShuffled, kSawtooth, kKDistinct };

std::string_view to_string(DatasetKind kind) noexcept;
std::optional<DatasetKind> parse_dataset_kind(std::string_view name) noexcept;

struct DatasetSpec {
  DatasetKind kind = DatasetKind::kShuffled;
  std::size_t n = 0;
  // Ignored by kShuffled.
  std::uint64_t k = 1;
  // Ignored by kSawtooth.
  std::uint64_t seed = 0;
};

// Fisher-Yates, i from n-1 down to 1, j = next() mod (i+1).
void shuffle(std::vector<Key>& keys, Rng64& rng);

// value[i] = i mod k
std::vector<Key> gen_sawtooth(std::size_t n, std::uint64_t k);
// Permutation of 0..n-1.
std::vector<Key> gen_shuffled(std::size_t n, std::uint64_t seed);
// Shuffled sawtooth; exactly min(n, k) distinct keys.
std::vector<Key> gen_kdistinct(std::size_t n, std::uint64_t k, std::uint64_t seed);

// Throws std::invalid_argument when k < 1 for the kinds that use k.
std::vector<Key> generate(const DatasetSpec& spec);

}  // namespace hopsort
