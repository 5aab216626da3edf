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

#include "slidegal/problem.hpp"

#include <cmath>
#include <stdexcept>

#include "slidegal/basis.hpp"

namespace slidegal
{

void ProblemSpec::validate() const
{
  q.validate("q");
  gamma.validate("gamma");
  y0.validate("y0");
  if (gamma.kind != ScalarField::Kind::cosine) {
    throw std::invalid_argument("gamma: sliding covector must be a cosine-mode field");
  }
  if (gamma.is_zero()) {
    throw std::invalid_argument("gamma: sliding covector must not be the zero functional");
  }
  if (!std::isfinite(g.left) || !std::isfinite(g.right)) {
    throw std::invalid_argument("g: boundary influence must be finite");
  }
  if (g.left == 0.0 && g.right == 0.0) {
    throw std::invalid_argument("g: boundary influence must not vanish at both endpoints");
  }
  if (!(horizon > 0.0)) {
    throw std::invalid_argument("horizon: T must be > 0");
  }
}

CoercivityReport analyze(const ProblemSpec & spec, int probe_dimension)
{
  spec.validate();
  if (probe_dimension < 2) {
    throw std::invalid_argument("analyze: probe_dimension must be >= 2");
  }

  CoercivityReport rep;
  rep.alpha = 1.0;
  rep.sup_q = sup_on_01(spec.q);
  rep.nu = -rep.sup_q;
  // On H^1(0,1) with |v|_V^2 = [v]^2 + |v|^2 we have [v] + |v| >= |v|_V.
  rep.lambda_vnorm = 1.0;
  rep.beta_vnorm = 1.0;

  // Rayleigh maximum of (g_N^T xi)^2 / (xi^T (M+K) xi); M+K is diagonal
  // 1 + (j pi)^2 for this basis, so the rank-one closed form is a plain sum.
  double c_sq = 0.0;
  for (int j = 0; j < probe_dimension; ++j) {
    const double gj = spec.g.left * basis_eval(j, 0.0) + spec.g.right * basis_eval(j, 1.0);
    c_sq += gj * gj / (1.0 + (j * M_PI) * (j * M_PI));
  }
  rep.trace_constant_estimate = c_sq;

  rep.transversality = spec.g.left * spec.gamma.eval(0.0) + spec.g.right * spec.gamma.eval(1.0);
  return rep;
}

}  // namespace slidegal
