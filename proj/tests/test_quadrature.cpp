// Copyright 2026 slidegal contributors
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
#include <stdexcept>
#include <random>

#include "doctest.h"
#include "slidegal/quadrature.hpp"

using namespace slidegal;

TEST_SUITE("quadrature")
{
  TEST_CASE("one-point rule is the midpoint rule")
  {
    const Quadrature q = gauss_legendre(1, 1);
    REQUIRE(q.size() == 1);
    CHECK(q.nodes[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("two-point rule nodes and weights")
  {
    const Quadrature q = gauss_legendre(2, 1);
    REQUIRE(q.size() == 2);
    const double off = 0.5 / std::sqrt(3.0);
    CHECK(q.nodes[0] == doctest::Approx(0.5 - off).epsilon(1e-15));
    CHECK(q.nodes[1] == doctest::Approx(0.5 + off).epsilon(1e-15));
    CHECK(q.weights[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q.weights[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q.integrate([](double x) { return x * x * x; }) ==
          doctest::Approx(0.25).epsilon(1e-15));
  }

  TEST_CASE("weights sum to one")
  {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> nn(1, 16);
    std::uniform_int_distribution<int> pp(1, 24);
    for (int trial = 0; trial < 150; ++trial) {
      const Quadrature q = gauss_legendre(nn(rng), pp(rng));
      double sum = 0.0;
      for (double w : q.weights) {
        CHECK(w > 0.0);
        sum += w;
      }
      CHECK(std::abs(sum - 1.0) < 1e-14);
    }
  }

  TEST_CASE("degree-of-exactness contract on random monomials")
  {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> nn(1, 10);
    std::uniform_int_distribution<int> pp(1, 6);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = nn(rng);
      const int p = pp(rng);
      const Quadrature q = gauss_legendre(n, p);
      const int degree = 2 * n - 1;
      for (int d = 0; d <= degree; ++d) {
        const double got = q.integrate([&](double x) { return std::pow(x, d); });
        CHECK(got == doctest::Approx(1.0 / (d + 1)).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("argument validation")
  {
    CHECK_THROWS_AS(gauss_legendre(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gauss_legendre(3, 0), std::invalid_argument);
  }
}
