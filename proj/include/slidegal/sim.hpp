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

#ifndef SLIDEGAL__SIM_HPP_
#define SLIDEGAL__SIM_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "slidegal/galerkin.hpp"
#include "slidegal/sliding.hpp"

namespace slidegal
{

enum class Scheme
{
  semi_implicit,  // backward Euler in the linear part, control held per step
  explicit_rk4,
};

struct SimConfig
{
  double dt = 1e-4;
  Scheme scheme = Scheme::semi_implicit;
  int record_stride = 1;

  void validate() const;
};

/// Fixed-grid record of a closed-loop run. All lists share one length; times
/// start at 0 and end at the horizon (within one step).
struct Trajectory
{
  std::vector<double> times;
  std::vector<Vector> states;
  std::vector<ControlSample> controls;
  std::vector<double> h_norms;
  std::vector<double> seminorms;
  std::vector<double> control_l2_running;  // sum u_i^2 dt over completed steps

  std::size_t size() const { return times.size(); }
  double dt = 0.0;
};

/// Non-finite state during integration. Carries whatever was recorded before
/// the blow-up so callers can flush a partial trajectory.
class DivergenceError : public std::runtime_error
{
public:
  DivergenceError(int step, Trajectory partial)
  : std::runtime_error("simulate: divergence (non-finite state) at step " + std::to_string(step)),
    step_(step),
    partial_(std::move(partial))
  {
  }

  int step() const { return step_; }
  const Trajectory & partial() const { return partial_; }

private:
  int step_;
  Trajectory partial_;
};

/// One backward-Euler step: solves (M + dt A) xi+ = M xi + dt u g_vec.
/// Throws SingularMatrixError if the shifted operator is singular.
Vector step_semi_implicit(const GalerkinSystem & sys, const Vector & xi, double u, double dt);

/// March the closed loop from sys.xi0 to T on a fixed grid. The control is
/// evaluated at the start state of each step; the linear part is implicit
/// (semi_implicit) or classical RK4 (explicit_rk4, guarded by a Gershgorin
/// stability check at start).
Trajectory simulate(
  const GalerkinSystem & sys, const ControllerConfig & cfg, const SimConfig & sim, double horizon);

/// Per-mode closed form for constant control, valid when A is diagonal
/// (within 1e-12 off-diagonal); throws OracleError otherwise.
Vector exact_modal_solution(const GalerkinSystem & sys, double u_const, double t);

}  // namespace slidegal

#endif  // SLIDEGAL__SIM_HPP_
