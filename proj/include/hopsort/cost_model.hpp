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
#include <string>

namespace hopsort {

// Closed-form merge-work prediction for n elements with k distinct keys:
// n + n log2 n when every key is distinct, otherwise 2n + n log2 k - k.
// Counts abstract merge work, not comparator calls. Throws
// std::invalid_argument unless 1 <= k <= n.
double predicted_cost(std::uint64_t n, std::uint64_t k);

// As predicted_cost, but a key bound above n means every element is distinct.
double predicted_cost_clamped(std::uint64_t n, std::uint64_t k);

// Throws std::invalid_argument for n == 0.
double per_element(double total, std::uint64_t n);

// Fixed-point with exactly five fractional digits.
std::string format_per_element(double value);

}  // namespace hopsort
