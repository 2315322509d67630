// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "qwalk/coins.hpp"
#include "qwalk/honeycomb.hpp"
#include "qwalk/square.hpp"
#include "support.hpp"

using namespace qwalk;

TEST_CASE("every catalog matrix is unitary to 1e-14") {
  for (const auto& name : coins::catalog_names()) {
    const auto spec = coins::catalog(name);
    const auto check = check_unitary(spec.matrix, 1e-14);
    INFO(name, " deviation ", check.max_deviation);
    CHECK(check.ok);
  }
}

TEST_CASE("catalog entries match their printed values") {
  const auto grover = coins::catalog("grover4").matrix;
  CHECK(grover.at(0, 0) == Complex(-0.5));
  CHECK(grover.at(0, 1) == Complex(0.5));

  const auto dht = coins::catalog("dht3").matrix;
  const double a = 2.0 / (2.0 * std::sqrt(3.0));
  for (int c = 0; c < 3; ++c) CHECK(testing::dist(dht.at(0, c), Complex(a)) < 1e-16);

  const auto unb = coins::catalog("unb3").matrix;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      CHECK(std::abs(unb.at(r, c)) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
      CHECK(abs2(unb.at(r, c)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
  }

  const auto dft4 = coins::catalog("dft4").matrix;
  CHECK(dft4.at(1, 1) == Complex(0.0, 0.5));
  CHECK(dft4.at(3, 1) == Complex(0.0, -0.5));

  // rows of the biased matrix have unit norm by the identity
  // (1 + (1−√3)² + (1+√3)²)/9 = 1
  const auto bia = coins::catalog("bia3").matrix;
  for (int r = 0; r < 3; ++r) {
    double norm = 0.0;
    for (int c = 0; c < 3; ++c) norm += abs2(bia.at(r, c));
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("a perturbed Grover matrix is rejected as non-unitary") {
  auto m = coins::catalog("grover4").matrix;
  m.at(0, 0) += 0.01;
  CHECK_FALSE(check_unitary(m, 1e-12).ok);
  CHECK_THROWS_AS(square::make_field(m), ParameterError);
}

TEST_CASE("there is no 3x3 Hadamard") {
  CHECK_THROWS_AS(coins::catalog("hadamard3"), ParameterError);
}

TEST_CASE("field construction rejects dimension mismatches") {
  CHECK_THROWS_AS(square::make_field(coins::catalog("grover3").matrix), ParameterError);
  CHECK_THROWS_AS(honeycomb::make_field(coins::catalog("grover4").matrix), ParameterError);
}

TEST_CASE("catalog names partition by dimension") {
  CHECK(coins::catalog_names(2).size() == 1);
  CHECK(coins::catalog_names(4).size() == 4);
  CHECK(coins::catalog_names(3).size() == 5);
}
