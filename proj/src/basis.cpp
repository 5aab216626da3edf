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

#include "slidegal/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace slidegal
{

namespace
{
constexpr double kSqrt2 = 1.4142135623730951;

void check_domain(int mode, double x)
{
  if (mode < 0) {
    throw std::domain_error("basis: mode index must be >= 0, got " + std::to_string(mode));
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("basis: x must lie in [0,1], got " + std::to_string(x));
  }
}
}  // namespace

double basis_eval(int mode, double x)
{
  check_domain(mode, x);
  if (mode == 0) {
    return 1.0;
  }
  return kSqrt2 * std::cos(mode * M_PI * x);
}

double basis_grad(int mode, double x)
{
  check_domain(mode, x);
  // sin(j pi x) vanishes identically at the endpoints; return the exact zero
  // rather than the rounded value of std::sin(j*pi).
  if (mode == 0 || x == 0.0 || x == 1.0) {
    return 0.0;
  }
  return -kSqrt2 * mode * M_PI * std::sin(mode * M_PI * x);
}

}  // namespace slidegal
