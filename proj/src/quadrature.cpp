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

#include "slidegal/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace slidegal
{

namespace
{

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, double x, double & p, double & dp)
{
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) {
    p = p0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

// Nodes/weights of the n-point rule on [-1,1]. Newton from the Chebyshev-like
// initial guess converges in a handful of iterations for all n of interest.
void gauss_nodes(int n, std::vector<double> & x, std::vector<double> & w)
{
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p = 0.0;
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, xi, p, dp);
      const double dx = p / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) {
        break;
      }
    }
    legendre(n, xi, p, dp);
    const double wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
    x[static_cast<std::size_t>(i)] = -xi;
    w[static_cast<std::size_t>(i)] = wi;
    x[static_cast<std::size_t>(n - 1 - i)] = xi;
    w[static_cast<std::size_t>(n - 1 - i)] = wi;
  }
  if (n % 2 == 1) {
    // Odd rules have a node exactly at the origin.
    double p = 0.0;
    double dp = 1.0;
    legendre(n, 0.0, p, dp);
    x[static_cast<std::size_t>(half - 1)] = 0.0;
    w[static_cast<std::size_t>(half - 1)] = 2.0 / (dp * dp);
  }
}

}  // namespace

Quadrature gauss_legendre(int n_nodes, int panels)
{
  if (n_nodes < 1 || panels < 1) {
    throw std::invalid_argument("gauss_legendre: n_nodes and panels must be >= 1");
  }
  std::vector<double> x;
  std::vector<double> w;
  gauss_nodes(n_nodes, x, w);

  Quadrature q;
  q.nodes.reserve(static_cast<std::size_t>(n_nodes) * panels);
  q.weights.reserve(static_cast<std::size_t>(n_nodes) * panels);
  const double h = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    const double left = p * h;
    for (int i = 0; i < n_nodes; ++i) {
      q.nodes.push_back(left + 0.5 * h * (x[static_cast<std::size_t>(i)] + 1.0));
      q.weights.push_back(0.5 * h * w[static_cast<std::size_t>(i)]);
    }
  }
  return q;
}

}  // namespace slidegal
