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

// Times each data-parallel kernel against its serial reference and reports
// the speedup, plus a serial-vs-parallel comparison of the dimension sweep.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "slidegal/diagnostics.hpp"
#include "slidegal/kernels.hpp"

using namespace slidegal;

namespace
{

double time_ms(const std::function<void()> & fn, int reps)
{
  fn();  // warm up
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) {
    fn();
  }
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void row(const char * name, int n, double serial_ms, double parallel_ms)
{
  std::printf(
    "%-28s n=%-5d serial %9.3f ms   parallel %9.3f ms   speedup %.2fx\n", name, n, serial_ms,
    parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main()
{
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; parallel paths run serially\n");
#endif

  const ScalarField q = ScalarField::cosine({0.3, -0.2, 0.1, 0.05});

  for (int n : {64, 128, 256}) {
    const Quadrature quad = gauss_legendre(8, n);
    const int reps = n <= 128 ? 5 : 2;
    const double s = time_ms([&] { potential_gram_serial(q, n, quad); }, reps);
    const double p = time_ms([&] { potential_gram(q, n, quad); }, reps);
    row("potential_gram", n, s, p);
  }

  for (int n : {64, 128, 256}) {
    const Quadrature quad = gauss_legendre(8, n);
    const int reps = n <= 128 ? 5 : 2;
    const double s = time_ms([&] { gradient_gram_quadrature_serial(n, quad); }, reps);
    const double p = time_ms([&] { gradient_gram_quadrature(n, quad); }, reps);
    row("gradient_gram_quadrature", n, s, p);
  }

  {
    const int n = 1024;
    Matrix a(n, n);
    Vector x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = 1.0 / (i + 1);
      for (int j = 0; j < n; ++j) {
        a(i, j) = 1.0 / (1.0 + i + j);
      }
    }
    const double s = time_ms([&] { matvec_serial(a, x); }, 50);
    const double p = time_ms([&] { matvec(a, x); }, 50);
    row("matvec", n, s, p);
  }

  {
    Vector xi(64, 0.1);
    std::vector<double> xs(4096);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      xs[i] = static_cast<double>(i) / (xs.size() - 1);
    }
    const double s = time_ms([&] { eval_expansion_serial(xi, xs); }, 10);
    const double p = time_ms([&] { eval_expansion(xi, xs); }, 10);
    row("eval_expansion", 4096, s, p);
  }

  {
    ProblemSpec spec;
    spec.q = q;
    spec.g = {0.0, 1.0};
    spec.gamma = ScalarField::cosine({1.0, 0.0, 0.5});
    spec.y0 = ScalarField::polynomial({0.0, 1.0});
    spec.horizon = 0.25;
    ControllerConfig cfg;
    cfg.mode = ControlMode::boundary_layer;
    cfg.rho = 2.0;
    cfg.delta = 1e-2;
    SimConfig sim;
    sim.dt = 1e-4;
    const std::vector<int> dims = {8, 16, 24, 32};
    const double s = time_ms([&] { convergence_study(spec, dims, cfg, sim, 1); }, 1);
    const double p = time_ms([&] { convergence_study(spec, dims, cfg, sim, 0); }, 1);
    row("convergence sweep (4 dims)", 32, s, p);
  }
  return 0;
}
