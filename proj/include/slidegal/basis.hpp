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

#ifndef SLIDEGAL__BASIS_HPP_
#define SLIDEGAL__BASIS_HPP_

namespace slidegal
{

// Orthonormal Neumann cosine basis on (0,1):
//   phi_0(x) = 1,  phi_j(x) = sqrt(2) cos(j pi x)  for j >= 1.
// Every mode has zero normal derivative at both endpoints, and
// int_0^1 (phi_j')^2 dx = (j pi)^2.

/// phi_j(x). Throws std::domain_error if x is outside [0,1].
double basis_eval(int mode, double x);

/// phi_j'(x). Exactly zero at x = 0 and x = 1 for every mode.
double basis_grad(int mode, double x);

}  // namespace slidegal

#endif  // SLIDEGAL__BASIS_HPP_
