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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hopsort/list.hpp"

namespace hopsort {

enum class Ordering { kLess, kEqual, kGreater };

struct ComparisonCounter {
  std::uint64_t invocations = 0;
};

// Three-way comparison. The counter advances by exactly one per call; this is
// the unit every reported comparison count is measured in.
inline Ordering compare3(Key a, Key b, ComparisonCounter& counter) noexcept {
  ++counter.invocations;
  if (a < b) return Ordering::kLess;
  if (b < a) return Ordering::kGreater;
  return Ordering::kEqual;
}

enum class MergeEngine { kBaseline, kHop };

std::string_view to_string(MergeEngine engine) noexcept;

struct SortStats {
  std::uint64_t comparisons = 0;
  std::uint64_t merges = 0;
  std::size_t max_stack_depth = 0;
};

// Stable merge of two nil-terminated sorted chains, one node per step. Ties
// take the node from `a`. Hop links are not read or written.
Node* merge_baseline(Node* a, Node* b, ComparisonCounter& counter) noexcept;

// Stable merge that steps over whole hop fragments, one comparison per step.
// On equal fragment heads both fragments are consumed and coalesced; the `b`
// fragment lands behind every `a` fragment of that key, so equal-key
// fragments keep their source order even when a list holds several adjacent
// fragments of one key (flagged by next_equal). Comparison count and
// resulting fragment-per-key structure match the plain splice of the `b`
// fragment directly behind the `a` fragment. Inputs must be hop-walk-valid;
// the output is too.
Node* merge_hop(Node* a, Node* b, ComparisonCounter& counter) noexcept;

// Called after every push with (number of sublists pushed so far, depth).
using PushObserver = std::function<void(std::uint64_t pushed, std::size_t depth)>;

// Bottom-up mergesort driven by a binary counter of pushed sublists: before
// pushing sublist c+1, one merge is performed per trailing one bit of c, the
// popped (older) list always being the left operand. Sorts `list` in place.
// Comparisons are added to `counter` and also reported in the stats.
SortStats mergesort(SortList& list, MergeEngine engine, ComparisonCounter& counter,
                    const PushObserver& on_push = {});

struct SortResult {
  std::vector<Key> keys;
  SortStats stats;
};

SortResult sort_with_stats(std::span<const Key> keys, MergeEngine engine);

}  // namespace hopsort
