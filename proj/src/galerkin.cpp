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

#include "slidegal/galerkin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "slidegal/basis.hpp"
#include "slidegal/errors.hpp"
#include "slidegal/kernels.hpp"

namespace slidegal
{

Quadrature default_quadrature(int n)
{
  return gauss_legendre(8, std::max(4, n));
}

GalerkinSystem assemble(const ProblemSpec & spec, int n, const Quadrature & quad)
{
  spec.validate();
  if (n < 1) {
    throw std::invalid_argument("assemble: dimension must be >= 1");
  }
  const int gamma_modes = spec.gamma.highest_index() + 1;
  if (n < gamma_modes) {
    throw NotRepresentableError(
      "assemble: sliding covector not representable in " + std::to_string(n) +
      " modes (needs " + std::to_string(gamma_modes) + ")");
  }

  GalerkinSystem sys;
  sys.n = n;
  sys.M = Matrix::identity(n);
  sys.sup_q = sup_on_01(spec.q);

  // K and the gradient part of A in closed form; the potential Gram matrix by
  // quadrature unless q vanishes identically.
  sys.K = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    sys.K(j, j) = (j * M_PI) * (j * M_PI);
  }
  if (spec.q.is_zero()) {
    sys.A = sys.K;
  } else {
    sys.A = potential_gram(spec.q, n, quad);
    for (std::size_t idx = 0; idx < sys.A.data.size(); ++idx) {
      sys.A.data[idx] = -sys.A.data[idx];
    }
    for (int j = 0; j < n; ++j) {
      sys.A(j, j) += sys.K(j, j);
    }
  }

  sys.g_vec.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    sys.g_vec[static_cast<std::size_t>(j)] =
      spec.g.left * basis_eval(j, 0.0) + spec.g.right * basis_eval(j, 1.0);
  }

  sys.gamma_vec.assign(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < gamma_modes; ++j) {
    sys.gamma_vec[static_cast<std::size_t>(j)] = spec.gamma.coeffs[static_cast<std::size_t>(j)];
  }

  // Initial state: cosine data projects by coefficient copy (truncation is
  // exactly the modal projection); anything else by quadrature.
  sys.xi0.assign(static_cast<std::size_t>(n), 0.0);
  if (spec.y0.kind == ScalarField::Kind::cosine) {
    const std::size_t m = std::min(spec.y0.coeffs.size(), static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < m; ++j) {
      sys.xi0[j] = spec.y0.coeffs[j];
    }
  } else {
    for (int j = 0; j < n; ++j) {
      sys.xi0[static_cast<std::size_t>(j)] =
        quad.integrate([&](double x) { return spec.y0.eval(x) * basis_eval(j, x); });
    }
  }
  return sys;
}

GalerkinSystem assemble(const ProblemSpec & spec, int n)
{
  return assemble(spec, n, default_quadrature(n));
}

Vector reconstruct(const GalerkinSystem & sys, const Vector & xi, const std::vector<double> & xs)
{
  if (static_cast<int>(xi.size()) != sys.n) {
    throw std::invalid_argument("reconstruct: state dimension mismatch");
  }
  return eval_expansion(xi, xs);
}

double h_norm(const GalerkinSystem & sys, const Vector & xi)
{
  if (static_cast<int>(xi.size()) != sys.n) {
    throw std::invalid_argument("h_norm: dimension mismatch");
  }
  return norm2(xi);  // M is the identity by construction
}

double seminorm(const GalerkinSystem & sys, const Vector & xi)
{
  if (static_cast<int>(xi.size()) != sys.n) {
    throw std::invalid_argument("seminorm: dimension mismatch");
  }
  return std::sqrt(std::max(0.0, quadratic_form(sys.K, xi)));
}

double v_norm(const GalerkinSystem & sys, const Vector & xi)
{
  const double h = h_norm(sys, xi);
  const double s = seminorm(sys, xi);
  return std::sqrt(h * h + s * s);
}

CovectorProjection project_covector(const GalerkinSystem & sys)
{
  CovectorProjection proj;
  proj.gamma_A.resize(static_cast<std::size_t>(sys.n));
  for (int j = 0; j < sys.n; ++j) {
    double s = 0.0;
    for (int i = 0; i < sys.n; ++i) {
      s += sys.A(i, j) * sys.gamma_vec[static_cast<std::size_t>(i)];
    }
    proj.gamma_A[static_cast<std::size_t>(j)] = s;
  }
  proj.gamma_g = dot(sys.gamma_vec, sys.g_vec);
  return proj;
}

}  // namespace slidegal
