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

#include "hopsort/cost_model.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hopsort {

double predicted_cost(std::uint64_t n, std::uint64_t k) {
  if (n < 1) throw std::invalid_argument("predicted_cost: n must be at least 1");
  if (k < 1) throw std::invalid_argument("predicted_cost: k must be at least 1");
  if (k > n) throw std::invalid_argument("predicted_cost: k must not exceed n");
  const auto nd = static_cast<double>(n);
  if (k == n) return nd + nd * std::log2(nd);
  const auto kd = static_cast<double>(k);
  return 2.0 * nd + nd * std::log2(kd) - kd;
}

double predicted_cost_clamped(std::uint64_t n, std::uint64_t k) {
  return predicted_cost(n, k < n ? k : n);
}

double per_element(double total, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("per_element: n must be at least 1");
  return total / static_cast<double>(n);
}

std::string format_per_element(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", value);
  return buf;
}

}  // namespace hopsort
