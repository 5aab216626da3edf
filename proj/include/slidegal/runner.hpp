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

#ifndef SLIDEGAL__RUNNER_HPP_
#define SLIDEGAL__RUNNER_HPP_

#include <string>

#include "slidegal/config.hpp"

namespace slidegal
{

// Experiment commands behind the CLI. Each returns a process exit status:
// 0 when every check requested by the command holds and nothing diverged.

/// Runs one closed-loop simulation; writes <prefix>_traj.csv,
/// <prefix>_field.csv and <prefix>_report.txt. On divergence the partial
/// trajectory is flushed with a trailing error line and the status is 2.
int cmd_simulate(const RunConfig & rc);

/// Runs the dimension sweep; writes <prefix>_converge.csv and a per-dimension
/// growth/energy summary to stdout. SLIDEGAL_THREADS caps the sweep fan-out.
int cmd_converge(const RunConfig & rc);

/// Runs analyze plus the assembly invariants only; prints the report.
int cmd_check(const RunConfig & rc);

/// 17-significant-digit decimal form whose round-trip is bit-exact.
std::string format_double(double v);

}  // namespace slidegal

#endif  // SLIDEGAL__RUNNER_HPP_
