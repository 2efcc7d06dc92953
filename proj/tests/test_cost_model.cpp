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
#include <stdexcept>

#include "doctest.h"

using namespace hopsort;

TEST_CASE("predicted_cost closed form") {
  CHECK(predicted_cost(8, 8) == doctest::Approx(32.0));
  CHECK(predicted_cost(16, 4) == doctest::Approx(60.0));
  CHECK(predicted_cost(16, 16) == doctest::Approx(80.0));
  CHECK(predicted_cost(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("both branches agree at k = n") {
  for (int m = 0; m <= 30; ++m) {
    const double n = std::ldexp(1.0, m);
    const double distinct_branch = n + n * std::log2(n);
    const double repeated_branch = 2.0 * n + n * std::log2(n) - n;
    CHECK(repeated_branch == doctest::Approx(distinct_branch));
    CHECK(predicted_cost(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n)) ==
          doctest::Approx(distinct_branch));
  }
}

TEST_CASE("doubling n adds k in the repeated-key regime") {
  for (std::uint64_t k : {1U, 4U, 16U, 1024U}) {
    for (std::uint64_t n = 2 * k; n <= (std::uint64_t{1} << 24); n *= 2) {
      CHECK(predicted_cost(2 * n, k) ==
            doctest::Approx(2.0 * predicted_cost(n, k) + static_cast<double>(k)));
    }
  }
}

TEST_CASE("predicted_cost rejects invalid arguments") {
  CHECK_THROWS_AS(predicted_cost(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(predicted_cost(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(predicted_cost(4, 8), std::invalid_argument);
  CHECK(predicted_cost_clamped(4, 1024) == doctest::Approx(predicted_cost(4, 4)));
}

TEST_CASE("per_element") {
  CHECK(format_per_element(per_element(448, 128)) == "3.50000");
  CHECK(format_per_element(per_element(0, 5)) == "0.00000");
  CHECK(format_per_element(per_element(48139, 8192)) == "5.87634");
  CHECK(format_per_element(per_element(65524, 8192)) == "7.99854");
  CHECK(format_per_element(per_element(11265, 2048)) == "5.50049");
  CHECK_THROWS_AS(per_element(1, 0), std::invalid_argument);
}
