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

#ifndef SLIDEGAL__CONFIG_HPP_
#define SLIDEGAL__CONFIG_HPP_

#include <string>
#include <vector>

#include "slidegal/problem.hpp"
#include "slidegal/sim.hpp"
#include "slidegal/sliding.hpp"

namespace slidegal
{

/// Everything one experiment needs: plant, controller, integrator, sweep
/// dimensions, and the output path prefix.
struct RunConfig
{
  ProblemSpec spec;
  int n_modes = 0;
  ControllerConfig controller;
  SimConfig sim;
  std::vector<int> dims;
  std::string out_prefix = "slidegal";
};

/// Parses and validates a JSON document. Unknown keys are an error (listed in
/// the message); violated invariants name the offending field. Defaults:
/// dt = 1e-4, scheme = semi_implicit, rho = 1, controller.mode =
/// open_loop_zero, q = 0, y0 = 0, record_stride chosen so that at most 10001
/// samples are kept.
RunConfig parse_config(const std::string & text);

}  // namespace slidegal

#endif  // SLIDEGAL__CONFIG_HPP_
