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

#include "hopsort/merge.hpp"

namespace hopsort {

std::string_view to_string(MergeEngine engine) noexcept {
  switch (engine) {
    case MergeEngine::kBaseline: return "baseline";
    case MergeEngine::kHop: return "hop";
  }
  return "unknown";
}

Node* merge_baseline(Node* a, Node* b, ComparisonCounter& counter) noexcept {
  if (a == nullptr) return b;
  if (b == nullptr) return a;

  Node* head = nullptr;
  if (compare3(a->key, b->key, counter) != Ordering::kGreater) {
    head = a;
    a = a->next;
  } else {
    head = b;
    b = b->next;
  }

  Node* p = head;
  while (a != nullptr && b != nullptr) {
    if (compare3(a->key, b->key, counter) != Ordering::kGreater) {
      p->next = a;
      p = a;
      a = a->next;
    } else {
      p->next = b;
      p = b;
      b = b->next;
    }
  }
  p->next = a == nullptr ? b : a;
  return head;
}

namespace {

// Output under construction for merge_hop. Fragments of one key are gathered
// into a block, split by source side, and linked a-side first when the block
// closes. The block keeps the fragment count the plain splice would produce:
// pieces minus fusions.
class HopOutput {
 public:
  Node* head() const noexcept { return head_; }

  // Appends the fragment starting at `first` to the open block and returns the
  // node that followed the fragment in its source chain.
  Node* take_a(Node* first) noexcept { return take(first, a_head_, a_tail_); }
  Node* take_b(Node* first) noexcept { return take(first, b_head_, b_tail_); }
  void fuse() noexcept { ++fusions_; }

  // Closes the open block. `successor_equal` records whether the fragment
  // linked after it carries the same key.
  void close(bool successor_equal) noexcept {
    if (a_head_ == nullptr && b_head_ == nullptr) return;
    Node* first = a_head_ != nullptr ? a_head_ : b_head_;
    Node* last = b_tail_ != nullptr ? b_tail_ : a_tail_;
    if (a_head_ != nullptr && b_head_ != nullptr) a_tail_->next = b_head_;

    if (fusions_ > 0) {
      Node* end = first->hop;
      for (std::size_t i = 0; i < fusions_; ++i) end = end->next->hop;
      first->hop = end;
    }
    for (Node* h = first;; h = h->hop->next) {
      Node* e = h->hop;
      if (e == last) {
        e->next_equal = successor_equal;
        break;
      }
      e->next_equal = true;
    }

    if (head_ == nullptr) {
      head_ = first;
    } else {
      tail_->next = first;
    }
    tail_ = last;
    a_head_ = a_tail_ = b_head_ = b_tail_ = nullptr;
    fusions_ = 0;
  }

  void finish(Node* rest) noexcept { tail_->next = rest; }

 private:
  static Node* take(Node* first, Node*& head, Node*& tail) noexcept {
    Node* rest = first->hop->next;
    if (head == nullptr) {
      head = first;
    } else {
      tail->next = first;
    }
    tail = first->hop;
    return rest;
  }

  Node* head_ = nullptr;
  Node* tail_ = nullptr;
  Node* a_head_ = nullptr;
  Node* a_tail_ = nullptr;
  Node* b_head_ = nullptr;
  Node* b_tail_ = nullptr;
  std::size_t fusions_ = 0;
};

}  // namespace

Node* merge_hop(Node* a, Node* b, ComparisonCounter& counter) noexcept {
  if (a == nullptr) return b;
  if (b == nullptr) return a;

  // Cursor movement and comparisons follow the plain hop merge exactly. What
  // differs is linking: an equal b fragment is held back until every a
  // fragment of that key has been placed. a_same / b_same tell whether the
  // cursor fragment carries the open block's key.
  HopOutput out;
  bool a_same = false;
  bool b_same = false;
  auto advance_a = [&] {
    const bool tie = a->hop->next_equal;
    a = out.take_a(a);
    a_same = tie;
  };
  auto advance_b = [&] {
    const bool tie = b->hop->next_equal;
    b = out.take_b(b);
    b_same = tie;
  };

  // Head selection takes a whole fragment but does not coalesce on ties, so
  // an equal b fragment stays a separate fragment.
  const Ordering first = compare3(a->key, b->key, counter);
  if (first != Ordering::kGreater) {
    advance_a();
    b_same = first == Ordering::kEqual;
  } else {
    advance_b();
  }

  while (a != nullptr && b != nullptr) {
    switch (compare3(a->key, b->key, counter)) {
      case Ordering::kLess:
        if (!a_same) out.close(false);
        advance_a();
        b_same = false;
        break;
      case Ordering::kGreater:
        if (!b_same) out.close(false);
        advance_b();
        a_same = false;
        break;
      case Ordering::kEqual:
        if (!a_same) out.close(false);
        advance_a();
        advance_b();
        out.fuse();
        break;
    }
  }

  if (a == nullptr) {
    out.close(b != nullptr && b_same);
    out.finish(b);
  } else {
    while (a != nullptr && a_same) advance_a();
    out.close(false);
    out.finish(a);
  }
  return out.head();
}

SortStats mergesort(SortList& list, MergeEngine engine, ComparisonCounter& counter,
                    const PushObserver& on_push) {
  SortStats stats;
  Node* node = list.head();
  if (node == nullptr || node->next == nullptr) return stats;

  const std::uint64_t before = counter.invocations;
  auto merge = [&](Node* a, Node* b) {
    ++stats.merges;
    return engine == MergeEngine::kHop ? merge_hop(a, b, counter)
                                       : merge_baseline(a, b, counter);
  };

  std::vector<Node*> stack;
  std::uint64_t pushed = 0;
  while (node != nullptr) {
    Node* next = node->next;
    node->next = nullptr;
    for (std::uint64_t bits = pushed; bits & 1U; bits >>= 1U) {
      Node* a = stack.back();
      stack.pop_back();
      node = merge(a, node);
    }
    stack.push_back(node);
    ++pushed;
    if (stack.size() > stats.max_stack_depth) stats.max_stack_depth = stack.size();
    if (on_push) on_push(pushed, stack.size());
    node = next;
  }

  node = stack.back();
  stack.pop_back();
  while (!stack.empty()) {
    Node* a = stack.back();
    stack.pop_back();
    node = merge(a, node);
  }

  list.relink(node);
  stats.comparisons = counter.invocations - before;
  return stats;
}

SortResult sort_with_stats(std::span<const Key> keys, MergeEngine engine) {
  SortList list = SortList::from_keys(keys);
  ComparisonCounter counter;
  SortStats stats = mergesort(list, engine, counter);
  return {to_keys(list), stats};
}

}  // namespace hopsort
