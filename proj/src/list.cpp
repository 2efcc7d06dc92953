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

#include "hopsort/list.hpp"

#include <algorithm>

namespace hopsort {

SortList SortList::from_keys(std::span<const Key> keys) {
  SortList list;
  list.arena_ = std::vector<Node>(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    Node& node = list.arena_[i];
    node.key = keys[i];
    node.origin = i;
    node.next = i + 1 < keys.size() ? &list.arena_[i + 1] : nullptr;
  }
  list.head_ = keys.empty() ? nullptr : list.arena_.data();
  list.length_ = keys.size();
  return list;
}

SortList SortList::from_values(std::span<const std::int64_t> values) {
  std::vector<Key> keys(values.size());
  std::transform(values.begin(), values.end(), keys.begin(),
                 [](std::int64_t v) { return Key{v}; });
  return from_keys(keys);
}

std::vector<Key> to_keys(const SortList& list) {
  std::vector<Key> out;
  out.reserve(list.size());
  for (const Node* n = list.head(); n != nullptr; n = n->next) {
    out.push_back(n->key);
  }
  return out;
}

std::vector<std::int64_t> to_values(const SortList& list) {
  std::vector<std::int64_t> out;
  out.reserve(list.size());
  for (const Node* n = list.head(); n != nullptr; n = n->next) {
    out.push_back(n->key.value);
  }
  return out;
}

HopWalk hop_walk(const SortList& list) {
  HopWalk walk;
  const Node* x = list.head();
  while (x != nullptr) {
    const std::size_t index = walk.nodes.size();
    walk.nodes.push_back(x);
    // Walk the fragment by next links to prove hop is at or after x and
    // that every node inside it shares x's key.
    const Node* cur = x;
    while (cur != x->hop) {
      cur = cur->next;
      if (cur == nullptr) {
        walk.violation = HopViolation{HopViolation::Kind::kUnreachable, index, x->origin};
        return walk;
      }
      if (cur->key != x->key) {
        walk.violation = HopViolation{HopViolation::Kind::kKeyMismatch, index, x->origin};
        return walk;
      }
    }
    x = x->hop->next;
  }
  return walk;
}

std::size_t distinct_key_count(const SortList& list) {
  std::size_t count = 0;
  const Node* prev = nullptr;
  for (const Node* x = list.head(); x != nullptr; x = x->hop->next) {
    if (prev == nullptr || prev->key != x->key) ++count;
    prev = x;
  }
  return count;
}

void normalize_hops(SortList& list) {
  Node* first = list.head();
  while (first != nullptr) {
    Node* last = first;
    first->next_equal = false;
    while (last->next != nullptr && last->next->key == first->key) {
      last = last->next;
      last->hop = last;
      last->next_equal = false;
    }
    first->hop = last;
    first = last->next;
  }
}

const char* to_string(Verdict::Kind kind) noexcept {
  switch (kind) {
    case Verdict::Kind::kPass: return "pass";
    case Verdict::Kind::kLength: return "length";
    case Verdict::Kind::kUnsorted: return "unsorted";
    case Verdict::Kind::kMultiset: return "multiset";
    case Verdict::Kind::kOrigin: return "origin";
    case Verdict::Kind::kStability: return "stability";
  }
  return "unknown";
}

Verdict check_sorted_stable(const SortList& list, std::span<const Key> original) {
  std::vector<const Node*> chain;
  chain.reserve(list.size());
  for (const Node* n = list.head(); n != nullptr; n = n->next) {
    if (chain.size() == list.size()) return {Verdict::Kind::kLength, chain.size()};
    chain.push_back(n);
  }
  if (chain.size() != list.size()) return {Verdict::Kind::kLength, chain.size()};

  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i]->key < chain[i - 1]->key) return {Verdict::Kind::kUnsorted, i};
  }

  std::vector<Key> expected(original.begin(), original.end());
  std::sort(expected.begin(), expected.end());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i >= expected.size() || expected[i] != chain[i]->key) return {Verdict::Kind::kMultiset, i};
  }
  if (chain.size() != expected.size()) return {Verdict::Kind::kMultiset, chain.size()};

  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Node* n = chain[i];
    if (n->origin >= original.size() || original[n->origin] != n->key) {
      return {Verdict::Kind::kOrigin, i};
    }
    if (i > 0 && chain[i - 1]->key == n->key && chain[i - 1]->origin >= n->origin) {
      return {Verdict::Kind::kStability, i};
    }
  }
  return {};
}

}  // namespace hopsort
