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

#ifndef SLIDEGAL__FIELD_HPP_
#define SLIDEGAL__FIELD_HPP_

#include <vector>

namespace slidegal
{

/// A scalar function on [0,1], stored either as polynomial coefficients
/// (ascending degree) or as coefficients over the Neumann cosine basis.
struct ScalarField
{
  enum class Kind { polynomial, cosine };

  Kind kind = Kind::polynomial;
  std::vector<double> coeffs;

  static ScalarField polynomial(std::vector<double> c);
  static ScalarField cosine(std::vector<double> c);

  /// Point evaluation; Horner for polynomials, sum of modes for cosine fields.
  /// Throws std::domain_error outside [0,1].
  double eval(double x) const;

  /// Highest index with a nonzero coefficient; -1 for the zero field.
  int highest_index() const;

  bool is_zero() const { return highest_index() < 0; }

  /// Throws std::invalid_argument if the coefficient list is empty or
  /// contains a non-finite value.
  void validate(const char * name) const;
};

/// sup over [0,1]. Exact (up to roundoff) for polynomials via critical-point
/// enumeration; dense sampling with local refinement for cosine fields.
double sup_on_01(const ScalarField & f);

/// Real roots of a polynomial (ascending coefficients) inside [lo, hi],
/// found by recursive derivative isolation + bisection.
std::vector<double> polynomial_roots(const std::vector<double> & coeffs, double lo, double hi);

}  // namespace slidegal

#endif  // SLIDEGAL__FIELD_HPP_
