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

#include "slidegal/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "slidegal/errors.hpp"

namespace slidegal
{

Matrix Matrix::identity(int n)
{
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

double dot(const Vector & a, const Vector & b)
{
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

double norm2(const Vector & a)
{
  return std::sqrt(dot(a, a));
}

LuFactor::LuFactor(Matrix a) : lu_(std::move(a))
{
  if (lu_.rows != lu_.cols) {
    throw std::invalid_argument("LuFactor: matrix must be square");
  }
  const int n = lu_.rows;
  perm_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    perm_[static_cast<std::size_t>(i)] = i;
  }

  double scale = 0.0;
  for (double v : lu_.data) {
    scale = std::max(scale, std::abs(v));
  }
  const double tiny = (scale > 0.0 ? scale : 1.0) * 1e-14 * n;

  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(lu_(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= tiny) {
      throw SingularMatrixError(
        "LuFactor: pivot " + std::to_string(k) + " is numerically singular");
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(lu_(k, j), lu_(piv, j));
      }
      std::swap(perm_[static_cast<std::size_t>(k)], perm_[static_cast<std::size_t>(piv)]);
    }
    const double inv = 1.0 / lu_(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double m = lu_(i, k) * inv;
      lu_(i, k) = m;
      for (int j = k + 1; j < n; ++j) {
        lu_(i, j) -= m * lu_(k, j);
      }
    }
  }
}

Vector LuFactor::solve(const Vector & rhs) const
{
  const int n = lu_.rows;
  if (static_cast<int>(rhs.size()) != n) {
    throw std::invalid_argument("LuFactor::solve: dimension mismatch");
  }
  Vector x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])];
  }
  for (int i = 0; i < n; ++i) {
    double s = x[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) {
      s -= lu_(i, j) * x[static_cast<std::size_t>(j)];
    }
    x[static_cast<std::size_t>(i)] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      s -= lu_(i, j) * x[static_cast<std::size_t>(j)];
    }
    x[static_cast<std::size_t>(i)] = s / lu_(i, i);
  }
  return x;
}

}  // namespace slidegal
