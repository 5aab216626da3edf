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

#ifndef SLIDEGAL__KERNELS_HPP_
#define SLIDEGAL__KERNELS_HPP_

#include <vector>

#include "slidegal/field.hpp"
#include "slidegal/linalg.hpp"
#include "slidegal/quadrature.hpp"

namespace slidegal
{

// Data-parallel assembly and evaluation kernels. Each kernel comes in an
// OpenMP-parallel flavor (the default) and a serial reference. Both flavors
// compute every output element with identical arithmetic, in the same order,
// so their results are bitwise equal for any thread count; the test suite
// asserts exactly that, and tools/bench.cpp times the two against each other.

/// Gram matrix of the potential term, G[i][j] = int_0^1 q phi_i phi_j dx.
Matrix potential_gram(const ScalarField & q, int n, const Quadrature & quad);
Matrix potential_gram_serial(const ScalarField & q, int n, const Quadrature & quad);

/// Gradient Gram matrix by quadrature, G[i][j] = int_0^1 phi_i' phi_j' dx.
/// Closed form is diag((j pi)^2); this quadrature route is kept as the
/// independent oracle for the assembly tests.
Matrix gradient_gram_quadrature(int n, const Quadrature & quad);
Matrix gradient_gram_quadrature_serial(int n, const Quadrature & quad);

/// Dense mat-vec, out = a * x.
Vector matvec(const Matrix & a, const Vector & x);
Vector matvec_serial(const Matrix & a, const Vector & x);

/// x^T a x (used for the K- and M-weighted norms).
double quadratic_form(const Matrix & a, const Vector & x);

/// Evaluate the modal expansion sum_j xi_j phi_j at each sample point.
Vector eval_expansion(const Vector & xi, const std::vector<double> & xs);
Vector eval_expansion_serial(const Vector & xi, const std::vector<double> & xs);

}  // namespace slidegal

#endif  // SLIDEGAL__KERNELS_HPP_
