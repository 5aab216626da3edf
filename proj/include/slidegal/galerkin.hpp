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

#ifndef SLIDEGAL__GALERKIN_HPP_
#define SLIDEGAL__GALERKIN_HPP_

#include <vector>

#include "slidegal/linalg.hpp"
#include "slidegal/problem.hpp"
#include "slidegal/quadrature.hpp"

namespace slidegal
{

/// The dimension-N modal model  M xi' + A xi = u(t) g_vec,  z = gamma_vec . xi.
/// M is the identity (orthonormal basis), A is the bilinear-form Gram matrix,
/// K the gradient Gram matrix used by the seminorm.
struct GalerkinSystem
{
  int n = 0;
  Matrix M;
  Matrix A;
  Matrix K;
  Vector g_vec;
  Vector gamma_vec;
  Vector xi0;
  double sup_q = 0.0;
};

/// Default assembly rule: 8-node Gauss-Legendre on max(4, n) panels.
Quadrature default_quadrature(int n);

/// Assembles the dimension-N system. The gradient part of A and all of K use
/// the closed form diag((j pi)^2); the potential part is integrated with
/// `quad`. Throws NotRepresentableError if gamma needs more than N modes.
GalerkinSystem assemble(const ProblemSpec & spec, int n, const Quadrature & quad);
GalerkinSystem assemble(const ProblemSpec & spec, int n);

/// y(x) = sum_j xi_j phi_j(x) at each sample point.
Vector reconstruct(const GalerkinSystem & sys, const Vector & xi, const std::vector<double> & xs);

double h_norm(const GalerkinSystem & sys, const Vector & xi);    // sqrt(xi^T M xi)
double seminorm(const GalerkinSystem & sys, const Vector & xi);  // sqrt(xi^T K xi)
double v_norm(const GalerkinSystem & sys, const Vector & xi);

/// gamma_A = A^T gamma_vec and gamma_g = gamma_vec . g_vec, so that
/// dz/dt = -gamma_A . xi + u * gamma_g along trajectories.
struct CovectorProjection
{
  Vector gamma_A;
  double gamma_g = 0.0;
};

CovectorProjection project_covector(const GalerkinSystem & sys);

}  // namespace slidegal

#endif  // SLIDEGAL__GALERKIN_HPP_
