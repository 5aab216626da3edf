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

#ifndef SLIDEGAL__PROBLEM_HPP_
#define SLIDEGAL__PROBLEM_HPP_

#include "slidegal/field.hpp"

namespace slidegal
{

// The continuous plant: a 1D heat equation on (0,1) with potential q,
// Neumann boundary actuation u(t)*g at the two endpoints, a sliding
// covector gamma defining the output z = (y, gamma), and initial state y0.

/// Boundary influence g restricted to the two-point boundary {0,1}.
struct BoundaryInfluence
{
  double left = 0.0;
  double right = 0.0;
};

struct ProblemSpec
{
  ScalarField q = ScalarField::polynomial({0.0});
  BoundaryInfluence g;
  ScalarField gamma = ScalarField::cosine({1.0});  // must stay a cosine field
  ScalarField y0 = ScalarField::polynomial({0.0});
  double horizon = 1.0;

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

/// Constants of the variational hypotheses for this plant, plus the
/// transversality number of the boundary/covector pair.
struct CoercivityReport
{
  double alpha = 1.0;
  double nu = 0.0;                      // -sup q
  double sup_q = 0.0;
  double lambda_vnorm = 1.0;
  double beta_vnorm = 1.0;
  double trace_constant_estimate = 0.0; // discrete bound C with |f(u)|_*^2 <= C u^2
  double transversality = 0.0;          // g(0) gamma(0) + g(1) gamma(1)
};

/// Computes the report. The trace constant is the maximum of the Rayleigh
/// quotient (g_N^T xi)^2 / (xi^T (M+K) xi) over the probe-dimension modal
/// space; it is a lower estimate of the true constant, monotone in the probe
/// dimension.
CoercivityReport analyze(const ProblemSpec & spec, int probe_dimension);

}  // namespace slidegal

#endif  // SLIDEGAL__PROBLEM_HPP_
