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

#include "slidegal/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "slidegal/basis.hpp"

namespace slidegal
{

namespace
{

// Gram entries are small compensated sums over the quadrature nodes: the
// integrands oscillate with amplitude up to (n pi)^2, and plain accumulation
// would eat the 1e-10 assembly tolerance at N = 32.
double weighted_inner(
  const std::vector<double> & w, const std::vector<double> & f, const std::vector<double> & g)
{
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double term = w[k] * f[k] * g[k];
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

double weighted_inner3(
  const std::vector<double> & w, const std::vector<double> & q, const std::vector<double> & f,
  const std::vector<double> & g)
{
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double term = w[k] * q[k] * f[k] * g[k];
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

std::vector<std::vector<double>> tabulate(
  int n, const Quadrature & quad, double (*fn)(int, double))
{
  std::vector<std::vector<double>> table(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto & row = table[static_cast<std::size_t>(i)];
    row.resize(quad.size());
    for (std::size_t k = 0; k < quad.size(); ++k) {
      row[k] = fn(i, quad.nodes[k]);
    }
  }
  return table;
}

}  // namespace

Matrix potential_gram_serial(const ScalarField & q, int n, const Quadrature & quad)
{
  if (n < 1) {
    throw std::invalid_argument("potential_gram: n must be >= 1");
  }
  std::vector<double> qvals(quad.size());
  for (std::size_t k = 0; k < quad.size(); ++k) {
    qvals[k] = q.eval(quad.nodes[k]);
  }
  const auto table = tabulate(n, quad, &basis_eval);

  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = weighted_inner3(
        quad.weights, qvals, table[static_cast<std::size_t>(i)],
        table[static_cast<std::size_t>(j)]);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

Matrix potential_gram(const ScalarField & q, int n, const Quadrature & quad)
{
  if (n < 1) {
    throw std::invalid_argument("potential_gram: n must be >= 1");
  }
  std::vector<double> qvals(quad.size());
  for (std::size_t k = 0; k < quad.size(); ++k) {
    qvals[k] = q.eval(quad.nodes[k]);
  }
  const auto table = tabulate(n, quad, &basis_eval);

  Matrix g(n, n);
#pragma omp parallel for schedule(dynamic) if (n >= 8)
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = weighted_inner3(
        quad.weights, qvals, table[static_cast<std::size_t>(i)],
        table[static_cast<std::size_t>(j)]);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

Matrix gradient_gram_quadrature_serial(int n, const Quadrature & quad)
{
  if (n < 1) {
    throw std::invalid_argument("gradient_gram_quadrature: n must be >= 1");
  }
  const auto table = tabulate(n, quad, &basis_grad);

  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = weighted_inner(
        quad.weights, table[static_cast<std::size_t>(i)], table[static_cast<std::size_t>(j)]);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

Matrix gradient_gram_quadrature(int n, const Quadrature & quad)
{
  if (n < 1) {
    throw std::invalid_argument("gradient_gram_quadrature: n must be >= 1");
  }
  const auto table = tabulate(n, quad, &basis_grad);

  Matrix g(n, n);
#pragma omp parallel for schedule(dynamic) if (n >= 8)
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = weighted_inner(
        quad.weights, table[static_cast<std::size_t>(i)], table[static_cast<std::size_t>(j)]);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

Vector matvec_serial(const Matrix & a, const Vector & x)
{
  if (static_cast<int>(x.size()) != a.cols) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  Vector out(static_cast<std::size_t>(a.rows));
  for (int i = 0; i < a.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols; ++j) {
      s += a(i, j) * x[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

Vector matvec(const Matrix & a, const Vector & x)
{
  if (static_cast<int>(x.size()) != a.cols) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  Vector out(static_cast<std::size_t>(a.rows));
#pragma omp parallel for if (a.rows >= 64)
  for (int i = 0; i < a.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols; ++j) {
      s += a(i, j) * x[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

double quadratic_form(const Matrix & a, const Vector & x)
{
  const Vector ax = matvec_serial(a, x);
  return dot(x, ax);
}

Vector eval_expansion_serial(const Vector & xi, const std::vector<double> & xs)
{
  Vector out(xs.size());
  for (std::size_t p = 0; p < xs.size(); ++p) {
    double s = 0.0;
    for (std::size_t j = 0; j < xi.size(); ++j) {
      s += xi[j] * basis_eval(static_cast<int>(j), xs[p]);
    }
    out[p] = s;
  }
  return out;
}

Vector eval_expansion(const Vector & xi, const std::vector<double> & xs)
{
  Vector out(xs.size());
  const int np = static_cast<int>(xs.size());
#pragma omp parallel for if (np >= 64)
  for (int p = 0; p < np; ++p) {
    double s = 0.0;
    for (std::size_t j = 0; j < xi.size(); ++j) {
      s += xi[j] * basis_eval(static_cast<int>(j), xs[static_cast<std::size_t>(p)]);
    }
    out[static_cast<std::size_t>(p)] = s;
  }
  return out;
}

}  // namespace slidegal
