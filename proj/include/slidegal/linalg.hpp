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

#ifndef SLIDEGAL__LINALG_HPP_
#define SLIDEGAL__LINALG_HPP_

#include <cstddef>
#include <vector>

namespace slidegal
{

using Vector = std::vector<double>;

/// Dense row-major square-or-rectangular matrix. N stays at desk scale here,
/// so no sparsity and no blocking.
struct Matrix
{
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double & operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  static Matrix identity(int n);
};

double dot(const Vector & a, const Vector & b);
double norm2(const Vector & a);

/// LU factorization with partial pivoting, factored once and reused for the
/// per-step solves of the semi-implicit scheme.
class LuFactor
{
public:
  explicit LuFactor(Matrix a);  // throws SingularMatrixError

  Vector solve(const Vector & rhs) const;

private:
  Matrix lu_;
  std::vector<int> perm_;
};

}  // namespace slidegal

#endif  // SLIDEGAL__LINALG_HPP_
