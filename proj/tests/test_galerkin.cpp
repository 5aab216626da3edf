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
#include "slidegal/basis.hpp"
#include "slidegal/errors.hpp"
#include "slidegal/galerkin.hpp"
#include "slidegal/kernels.hpp"

using namespace slidegal;

namespace
{

ProblemSpec base_spec()
{
  ProblemSpec spec;
  spec.q = ScalarField::polynomial({0.0});
  spec.g = {0.0, 1.0};
  spec.gamma = ScalarField::cosine({1.0, 0.0, 0.5});
  spec.y0 = ScalarField::polynomial({0.0, 1.0});
  spec.horizon = 0.5;
  return spec;
}

ProblemSpec random_spec(std::mt19937 & rng)
{
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<int> len(1, 4);
  std::bernoulli_distribution flip(0.5);
  auto random_field = [&](bool cosine_only) {
    std::vector<double> c(static_cast<std::size_t>(len(rng)));
    for (auto & v : c) {
      v = coeff(rng);
    }
    if (cosine_only || flip(rng)) {
      return ScalarField::cosine(c);
    }
    return ScalarField::polynomial(c);
  };
  ProblemSpec spec;
  spec.q = random_field(false);
  spec.g = {coeff(rng), 1.0 + coeff(rng)};
  spec.gamma = random_field(true);
  if (spec.gamma.is_zero()) {
    spec.gamma = ScalarField::cosine({1.0});
  }
  spec.y0 = random_field(false);
  spec.horizon = 0.25;
  return spec;
}

}  // namespace

TEST_SUITE("galerkin")
{
  TEST_CASE("assembly: zero potential gives the closed-form diagonal")
  {
    const GalerkinSystem sys = assemble(base_spec(), 3);
    const double pi2 = M_PI * M_PI;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double expected = (i == j) ? i * i * pi2 : 0.0;
        CHECK(sys.A(i, j) == doctest::Approx(expected).epsilon(1e-14));
      }
    }
    CHECK(sys.A(1, 1) == doctest::Approx(9.8696044010893586).epsilon(1e-14));
    CHECK(sys.A(2, 2) == doctest::Approx(39.478417604357434).epsilon(1e-14));
  }

  TEST_CASE("assembly: boundary influence vector for g = (0,1)")
  {
    const GalerkinSystem sys = assemble(base_spec(), 3);
    CHECK(sys.g_vec[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sys.g_vec[1] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
    CHECK(sys.g_vec[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  }

  TEST_CASE("assembly: A[0][0] = -1/2 for q(x) = x at dimension 1")
  {
    ProblemSpec spec = base_spec();
    spec.q = ScalarField::polynomial({0.0, 1.0});
    spec.gamma = ScalarField::cosine({1.0});
    const GalerkinSystem sys = assemble(spec, 1);
    CHECK(std::abs(sys.A(0, 0) - (-0.5)) <= 1e-12);
  }

  TEST_CASE("assembly rejects dimensions that truncate gamma")
  {
    CHECK_THROWS_AS(assemble(base_spec(), 2), NotRepresentableError);
    CHECK_NOTHROW(assemble(base_spec(), 3));
  }

  TEST_CASE("quadrature oracle: gradient Gram matches diag((j pi)^2) to 1e-10 up to N = 32")
  {
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> dim(1, 32);
    const Quadrature strong = gauss_legendre(12, 64);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = dim(rng);
      const Matrix k = gradient_gram_quadrature(n, strong);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double expected = (i == j) ? (i * M_PI) * (i * M_PI) : 0.0;
          CHECK(std::abs(k(i, j) - expected) <= 1e-10);
        }
      }
    }
  }

  TEST_CASE("system invariants: mass identity, symmetry, K structure, nesting")
  {
    std::mt19937 rng(56);
    std::uniform_int_distribution<int> dim(4, 20);
    for (int trial = 0; trial < 100; ++trial) {
      const ProblemSpec spec = random_spec(rng);
      const int n_small = std::max(dim(rng), spec.gamma.highest_index() + 1);
      const int n_big = n_small + dim(rng);
      const Quadrature quad = default_quadrature(n_big);
      const GalerkinSystem big = assemble(spec, n_big, quad);
      const GalerkinSystem small = assemble(spec, n_small, quad);

      for (int i = 0; i < big.n; ++i) {
        for (int j = 0; j < big.n; ++j) {
          CHECK(big.M(i, j) == (i == j ? 1.0 : 0.0));
          CHECK(std::abs(big.A(i, j) - big.A(j, i)) < 1e-12);
          CHECK(std::abs(big.K(i, j) - big.K(j, i)) < 1e-12);
        }
      }
      CHECK(big.K(0, 0) == 0.0);

      // nesting: with a shared quadrature the small system is the exact
      // leading block of the big one
      for (int i = 0; i < small.n; ++i) {
        for (int j = 0; j < small.n; ++j) {
          CHECK(small.A(i, j) == big.A(i, j));
          CHECK(small.K(i, j) == big.K(i, j));
        }
        CHECK(small.g_vec[static_cast<std::size_t>(i)] == big.g_vec[static_cast<std::size_t>(i)]);
        CHECK(small.gamma_vec[static_cast<std::size_t>(i)] ==
              big.gamma_vec[static_cast<std::size_t>(i)]);
        CHECK(small.xi0[static_cast<std::size_t>(i)] == big.xi0[static_cast<std::size_t>(i)]);
      }
    }
  }

  TEST_CASE("discrete coercivity: 1000 random vectors per spec")
  {
    std::mt19937 rng(57);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int s = 0; s < 5; ++s) {
      const ProblemSpec spec = random_spec(rng);
      const int n = 12;
      const GalerkinSystem sys = assemble(spec, n);
      for (int k = 0; k < 1000; ++k) {
        Vector xi(static_cast<std::size_t>(n));
        for (auto & v : xi) {
          v = unif(rng);
        }
        const double xa = quadratic_form(sys.A, xi);
        const double xk = quadratic_form(sys.K, xi);
        const double xx = dot(xi, xi);
        const double slack = 1e-9 * (1.0 + xk + std::abs(sys.sup_q) * xx);
        CHECK(xa >= xk - sys.sup_q * xx - slack);
      }
    }
  }

  TEST_CASE("reconstruct point values")
  {
    const GalerkinSystem sys = assemble(base_spec(), 3);
    CHECK(reconstruct(sys, {1.0, 0.0, 0.0}, {0.3})[0] == 1.0);
    CHECK(reconstruct(sys, {0.0, 1.0, 0.0}, {0.0})[0] ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(reconstruct(sys, {1.0, 0.0, 0.5}, {1.0})[0] ==
          doctest::Approx(1.0 + 0.5 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(reconstruct(sys, {1.0, 2.0}, {0.5}), std::invalid_argument);
  }

  TEST_CASE("norms")
  {
    const GalerkinSystem sys = assemble(base_spec(), 3);
    CHECK(h_norm(sys, {3.0, 4.0, 0.0}) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(seminorm(sys, {1.0, 0.0, 0.0}) == 0.0);
    CHECK(seminorm(sys, {0.0, 1.0, 0.0}) == doctest::Approx(M_PI).epsilon(1e-14));
    const double h = h_norm(sys, {1.0, 2.0, 3.0});
    const double s = seminorm(sys, {1.0, 2.0, 3.0});
    CHECK(v_norm(sys, {1.0, 2.0, 3.0}) == doctest::Approx(std::sqrt(h * h + s * s)));
    CHECK_THROWS_AS(h_norm(sys, {1.0}), std::invalid_argument);
  }

  TEST_CASE("Parseval: quadrature H-norm of the reconstruction matches |xi|_2")
  {
    std::mt19937 rng(58);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::uniform_int_distribution<int> dim(3, 16);
    for (int trial = 0; trial < 100; ++trial) {
      ProblemSpec spec = base_spec();
      const int n = dim(rng);
      const GalerkinSystem sys = assemble(spec, n);
      Vector xi(static_cast<std::size_t>(n));
      for (auto & v : xi) {
        v = unif(rng);
      }
      const Quadrature strong = gauss_legendre(10, 2 * n + 4);
      const double l2 = std::sqrt(strong.integrate([&](double x) {
        const double y = reconstruct(sys, xi, {x})[0];
        return y * y;
      }));
      CHECK(l2 == doctest::Approx(norm2(xi)).epsilon(1e-8));
    }
  }

  TEST_CASE("projection examples")
  {
    const GalerkinSystem sys = assemble(base_spec(), 3);
    const CovectorProjection proj = project_covector(sys);
    CHECK(proj.gamma_g == doctest::Approx(1.0 + 0.5 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(proj.gamma_A[0] == doctest::Approx(0.0));
    CHECK(proj.gamma_A[1] == doctest::Approx(0.0));
    CHECK(proj.gamma_A[2] == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-13));

    ProblemSpec spec = base_spec();
    spec.gamma = ScalarField::cosine({1.0});
    const GalerkinSystem sys0 = assemble(spec, 3);
    const CovectorProjection proj0 = project_covector(sys0);
    for (double v : proj0.gamma_A) {
      CHECK(v == 0.0);
    }
  }

  TEST_CASE("projection consistency: gamma_A . xi equals a(y, P gamma) by quadrature")
  {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::uniform_int_distribution<int> dim(3, 12);
    for (int trial = 0; trial < 100; ++trial) {
      const ProblemSpec spec = random_spec(rng);
      const int n = std::max(dim(rng), spec.gamma.highest_index() + 1);
      const GalerkinSystem sys = assemble(spec, n, gauss_legendre(10, 2 * n + 4));
      const CovectorProjection proj = project_covector(sys);
      Vector xi(static_cast<std::size_t>(n));
      for (auto & v : xi) {
        v = unif(rng);
      }
      const Quadrature strong = gauss_legendre(10, 2 * n + 4);
      auto grad_at = [&](const Vector & c, double x) {
        double s = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j) {
          s += c[j] * basis_grad(static_cast<int>(j), x);
        }
        return s;
      };
      const double direct = strong.integrate([&](double x) {
        const double yv = reconstruct(sys, xi, {x})[0];
        const double gv = reconstruct(sys, sys.gamma_vec, {x})[0];
        return grad_at(xi, x) * grad_at(sys.gamma_vec, x) - spec.q.eval(x) * yv * gv;
      });
      CHECK(dot(proj.gamma_A, xi) == doctest::Approx(direct).epsilon(1e-8));
    }
  }

  TEST_CASE("cosine initial data is projected by coefficient copy")
  {
    ProblemSpec spec = base_spec();
    spec.y0 = ScalarField::cosine({0.25, -0.5, 0.125, 0.0625});
    const GalerkinSystem sys = assemble(spec, 3);
    CHECK(sys.xi0[0] == 0.25);
    CHECK(sys.xi0[1] == -0.5);
    CHECK(sys.xi0[2] == 0.125);  // trailing mode truncated: modal projection
  }
}
