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

#ifndef SLIDEGAL__SLIDING_HPP_
#define SLIDEGAL__SLIDING_HPP_

#include <optional>

#include "slidegal/galerkin.hpp"

namespace slidegal
{

// Variable-structure laws for the modal system. With z = gamma_vec . xi the
// closed loop obeys dz/dt = -gamma_A . xi + u * gamma_g; a sliding mode on
// z = 0 exists when gamma_g != 0, and the relay gain
//   U = |gamma_A . xi| + rho * |gamma_g|
// dominates the drift with margin rho * |gamma_g|, which makes the reaching
// rate (and therefore the reaching-time bound) quantitative.

enum class ControlMode
{
  relay,
  boundary_layer,
  equivalent,
  open_loop_zero,
  open_loop_constant,
};

struct ControllerConfig
{
  ControlMode mode = ControlMode::open_loop_zero;
  double rho = 1.0;                // gain margin (relay / boundary layer)
  double delta = 0.0;              // layer half-width (boundary layer)
  std::optional<double> u_max;     // optional saturation cap on |u|
  double constant = 0.0;           // open_loop_constant value

  void validate() const;           // throws std::invalid_argument
};

/// One evaluation of the control law at a state.
struct ControlSample
{
  double u = 0.0;       // applied control
  double z = 0.0;       // sliding output at the state
  double gain_U = 0.0;  // relay/layer gain actually used (0 for other modes)
  double u_eq = 0.0;    // equivalent control at the state (0 if undefined)
};

/// Absolute tolerance below which gamma^T g counts as zero.
inline constexpr double kTransversalityTol = 1e-10;

double sliding_output(const GalerkinSystem & sys, const Vector & xi);

/// Control value solving dz/dt = 0. Throws TransversalityError when
/// |gamma_g| <= kTransversalityTol.
double equivalent_control(const GalerkinSystem & sys, const Vector & xi);

/// Relay/layer gain U at a state; honors the saturation cap when set.
double gain(const GalerkinSystem & sys, const Vector & xi, const ControllerConfig & cfg);

ControlSample relay_control(
  const GalerkinSystem & sys, const Vector & xi, const ControllerConfig & cfg);

ControlSample boundary_layer_control(
  const GalerkinSystem & sys, const Vector & xi, const ControllerConfig & cfg);

/// |z0| / (rho |gamma_g|): time by which the relay law reaches z = 0.
double reaching_time_bound(double z0, double rho, double gamma_g);

/// Dispatch on cfg.mode with a precomputed projection (the per-step path the
/// integrator uses). Throws TransversalityError for the modes that need
/// gamma_g != 0.
ControlSample eval_control(
  const GalerkinSystem & sys, const CovectorProjection & proj, const Vector & xi,
  const ControllerConfig & cfg);

}  // namespace slidegal

#endif  // SLIDEGAL__SLIDING_HPP_
