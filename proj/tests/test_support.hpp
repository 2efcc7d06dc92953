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

#include <cstdint>
#include <span>
#include <vector>

#include "hopsort/list.hpp"
#include "oracle.hpp"

namespace testing {

inline std::vector<hopsort::Key> keys_of(std::span<const std::int64_t> values) {
  std::vector<hopsort::Key> keys;
  for (std::int64_t v : values) keys.push_back(hopsort::Key{v});
  return keys;
}

inline oracle::Elements elements_of(const hopsort::SortList& list) {
  oracle::Elements out;
  for (const hopsort::Node* n = list.head(); n != nullptr; n = n->next) {
    out.emplace_back(n->key.value, n->origin);
  }
  return out;
}

// Fragments as seen by the hop walk. Assumes the walk is valid.
inline oracle::Fragments fragments_of(const hopsort::SortList& list) {
  oracle::Fragments out;
  for (const hopsort::Node* x : hopsort::hop_walk(list).nodes) {
    oracle::Fragment f{x->key.value, {}};
    for (const hopsort::Node* cur = x;; cur = cur->next) {
      f.origins.push_back(cur->origin);
      if (cur == x->hop) break;
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<std::int64_t> fragment_keys(const oracle::Fragments& fragments) {
  std::vector<std::int64_t> keys;
  for (const auto& f : fragments) keys.push_back(f.key);
  return keys;
}

}  // namespace testing
