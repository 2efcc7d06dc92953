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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hopsort {

struct Key {
  std::int64_t value = 0;

  friend constexpr auto operator<=>(Key, Key) = default;
};

// One list element. A fresh node hops to itself. When a node heads a hop
// fragment, `hop` is the last node of that fragment and every node from this
// one through `hop` (in next-order) carries an equal key.
//
// `next_equal` is only meaningful on the last node of a fragment: it is set
// when the fragment that follows is known to carry the same key. The hop
// merge relies on it to keep equal-key fragments in stable order.
struct Node {
  Key key;
  std::size_t origin = 0;
  Node* next = nullptr;
  Node* hop = this;
  bool next_equal = false;
};

// Owns a chain of nodes in a single arena. Sorting re-links nodes in place;
// node addresses never change for the lifetime of the list.
class SortList {
 public:
  SortList() = default;
  SortList(SortList&&) noexcept = default;
  SortList& operator=(SortList&&) noexcept = default;
  SortList(const SortList&) = delete;
  SortList& operator=(const SortList&) = delete;

  static SortList from_keys(std::span<const Key> keys);
  static SortList from_values(std::span<const std::int64_t> values);

  Node* head() noexcept { return head_; }
  const Node* head() const noexcept { return head_; }
  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return head_ == nullptr; }

  // Replaces the chain head after an engine re-linked the nodes. The new
  // chain must contain exactly the nodes this list owns.
  void relink(Node* head) noexcept { head_ = head; }

  // Direct access to the arena in construction order (index == origin).
  std::span<Node> nodes() noexcept { return arena_; }
  std::span<const Node> nodes() const noexcept { return arena_; }

 private:
  std::vector<Node> arena_;
  Node* head_ = nullptr;
  std::size_t length_ = 0;
};

std::vector<Key> to_keys(const SortList& list);
std::vector<std::int64_t> to_values(const SortList& list);

struct HopViolation {
  enum class Kind {
    // hop target carries a different key, or an interior node does
    kKeyMismatch,
    // hop target is not reachable from the node via next
    kUnreachable,
  };
  Kind kind;
  // Index of the offending node within the walk.
  std::size_t walk_index;
  std::size_t origin;
};

struct HopWalk {
  std::vector<const Node*> nodes;
  std::optional<HopViolation> violation;

  bool valid() const noexcept { return !violation.has_value(); }
};

// Visits head, head->hop->next, ... and validates each visited hop fragment.
// Stops at the first violation.
HopWalk hop_walk(const SortList& list);

// Number of distinct keys in a sorted, hop-walk-valid list. Counts walk
// positions whose key differs from the previous walk position.
std::size_t distinct_key_count(const SortList& list);

// Rewrites hops so each maximal segment head hops to the segment's last node
// and every other node hops to itself; clears next_equal everywhere. The list
// must be sorted.
void normalize_hops(SortList& list);

struct Verdict {
  enum class Kind {
    kPass,
    kLength,
    kUnsorted,
    kMultiset,
    kOrigin,
    kStability,
  };
  Kind kind = Kind::kPass;
  // First violating position in next-order.
  std::size_t position = 0;

  bool ok() const noexcept { return kind == Kind::kPass; }
};

const char* to_string(Verdict::Kind kind) noexcept;

// Checks (a) keys nondecreasing, (b) the key multiset matches `original`,
// (c) each node's origin indexes its own key in `original`, and (d) origins
// strictly increase inside every run of equal keys.
Verdict check_sorted_stable(const SortList& list, std::span<const Key> original);

}  // namespace hopsort
