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

#ifndef SLIDEGAL__QUADRATURE_HPP_
#define SLIDEGAL__QUADRATURE_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

namespace slidegal
{

/// Composite quadrature rule on [0,1]. Weights are positive and sum to 1.
struct Quadrature
{
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  /// Integrate a callable over [0,1] with compensated summation.
  template <typename F>
  double integrate(F && f) const
  {
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const double term = weights[k] * f(nodes[k]);
      const double t = sum + term;
      if (std::abs(sum) >= std::abs(term)) {
        comp += (sum - t) + term;
      } else {
        comp += (term - t) + sum;
      }
      sum = t;
    }
    return sum + comp;
  }
};

/// Composite Gauss-Legendre rule: `panels` equal subintervals of [0,1] with
/// `n_nodes` points each; exact for polynomials of degree <= 2*n_nodes-1 on
/// each panel. Nodes are computed by Newton iteration on Legendre polynomials,
/// so any order is available.
Quadrature gauss_legendre(int n_nodes, int panels);

}  // namespace slidegal

#endif  // SLIDEGAL__QUADRATURE_HPP_
