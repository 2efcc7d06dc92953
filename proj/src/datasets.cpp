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

#include "hopsort/datasets.hpp"

#include <stdexcept>
#include <utility>

namespace hopsort {

std::string_view to_string(DatasetKind kind) noexcept {
  switch (kind) {
    case DatasetKind::kShuffled: return "shuffled";
    case DatasetKind::kSawtooth: return "sawtooth";
    case DatasetKind::kKDistinct: return "kdistinct";
  }
  return "unknown";
}

std::optional<DatasetKind> parse_dataset_kind(std::string_view name) noexcept {
  if (name == "shuffled") return DatasetKind::kShuffled;
  if (name == "sawtooth") return DatasetKind::kSawtooth;
  if (name == "kdistinct") return DatasetKind::kKDistinct;
  return std::nullopt;
}

void shuffle(std::vector<Key>& keys, Rng64& rng) {
  for (std::size_t i = keys.size(); i-- > 1;) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(keys[i], keys[j]);
  }
}

namespace {

void require_k(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("dataset k must be at least 1");
}

}  // namespace

std::vector<Key> gen_sawtooth(std::size_t n, std::uint64_t k) {
  require_k(k);
  std::vector<Key> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    keys[i] = Key{static_cast<std::int64_t>(i % k)};
  }
  return keys;
}

std::vector<Key> gen_shuffled(std::size_t n, std::uint64_t seed) {
  std::vector<Key> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = Key{static_cast<std::int64_t>(i)};
  Rng64 rng(seed);
  shuffle(keys, rng);
  return keys;
}

std::vector<Key> gen_kdistinct(std::size_t n, std::uint64_t k, std::uint64_t seed) {
  std::vector<Key> keys = gen_sawtooth(n, k);
  Rng64 rng(seed);
  shuffle(keys, rng);
  return keys;
}

std::vector<Key> generate(const DatasetSpec& spec) {
  switch (spec.kind) {
    case DatasetKind::kShuffled: return gen_shuffled(spec.n, spec.seed);
    case DatasetKind::kSawtooth: return gen_sawtooth(spec.n, spec.k);
    case DatasetKind::kKDistinct: return gen_kdistinct(spec.n, spec.k, spec.seed);
  }
  throw std::invalid_argument("unknown dataset kind");
}

}  // namespace hopsort
