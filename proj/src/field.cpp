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

#include "slidegal/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "slidegal/basis.hpp"

namespace slidegal
{

namespace
{

double horner(const std::vector<double> & c, double x)
{
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::vector<double> derivative(const std::vector<double> & c)
{
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) {
    d.push_back(static_cast<double>(k) * c[k]);
  }
  return d;
}

int effective_degree(const std::vector<double> & c)
{
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    if (c[static_cast<std::size_t>(k)] != 0.0) {
      return k;
    }
  }
  return -1;
}

// Bisection on a bracket with opposite signs. 200 halvings take the bracket
// well below 1 ulp on [0,1].
double bisect(const std::vector<double> & c, double lo, double hi)
{
  double flo = horner(c, lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      break;
    }
    const double fmid = horner(c, mid);
    if (fmid == 0.0) {
      return mid;
    }
    if ((flo < 0.0) != (fmid < 0.0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ScalarField ScalarField::polynomial(std::vector<double> c)
{
  ScalarField f;
  f.kind = Kind::polynomial;
  f.coeffs = std::move(c);
  return f;
}

ScalarField ScalarField::cosine(std::vector<double> c)
{
  ScalarField f;
  f.kind = Kind::cosine;
  f.coeffs = std::move(c);
  return f;
}

double ScalarField::eval(double x) const
{
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("ScalarField::eval: x must lie in [0,1], got " + std::to_string(x));
  }
  if (kind == Kind::polynomial) {
    return horner(coeffs, x);
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0.0) {
      acc += coeffs[j] * basis_eval(static_cast<int>(j), x);
    }
  }
  return acc;
}

int ScalarField::highest_index() const
{
  return effective_degree(coeffs);
}

void ScalarField::validate(const char * name) const
{
  if (coeffs.empty()) {
    throw std::invalid_argument(std::string(name) + ": coefficient list must be nonempty");
  }
  for (double c : coeffs) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument(std::string(name) + ": coefficients must be finite");
    }
  }
}

std::vector<double> polynomial_roots(const std::vector<double> & coeffs, double lo, double hi)
{
  const int deg = effective_degree(coeffs);
  if (deg <= 0) {
    return {};  // constant (or zero): no isolated roots reported
  }
  if (deg == 1) {
    const double r = -coeffs[0] / coeffs[1];
    if (r >= lo && r <= hi) {
      return {r};
    }
    return {};
  }
  // Roots of the derivative split [lo,hi] into monotone pieces; bisect each
  // piece that brackets a sign change.
  std::vector<double> knots = polynomial_roots(derivative(coeffs), lo, hi);
  knots.insert(knots.begin(), lo);
  knots.push_back(hi);
  std::sort(knots.begin(), knots.end());

  std::vector<double> roots;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const double a = knots[k];
    const double b = knots[k + 1];
    if (a >= b) {
      continue;
    }
    const double fa = horner(coeffs, a);
    const double fb = horner(coeffs, b);
    if (fa == 0.0) {
      if (roots.empty() || roots.back() != a) {
        roots.push_back(a);
      }
    }
    if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
      roots.push_back(bisect(coeffs, a, b));
    }
    if (fb == 0.0 && k + 2 == knots.size()) {
      roots.push_back(b);
    }
  }
  return roots;
}

double sup_on_01(const ScalarField & f)
{
  if (f.kind == ScalarField::Kind::polynomial) {
    double best = std::max(f.eval(0.0), f.eval(1.0));
    for (double r : polynomial_roots(derivative(f.coeffs), 0.0, 1.0)) {
      best = std::max(best, f.eval(r));
    }
    return best;
  }

  // Cosine field: 1001-point uniform scan (documented resolution), then a
  // golden-section polish of the best basin so the reported sup is not a
  // strict under-estimate at the scan resolution.
  constexpr int kSamples = 1001;
  double best = f.eval(0.0);
  int best_i = 0;
  for (int i = 1; i < kSamples; ++i) {
    const double x = static_cast<double>(i) / (kSamples - 1);
    const double v = f.eval(x);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double a = std::max(0.0, (best_i - 1.0) / (kSamples - 1));
  double b = std::min(1.0, (best_i + 1.0) / (kSamples - 1));
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f.eval(x1);
  double f2 = f.eval(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f.eval(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f.eval(x1);
    }
  }
  return std::max(best, std::max(f1, f2));
}

}  // namespace slidegal
