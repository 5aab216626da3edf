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

#include "slidegal/sliding.hpp"

#include <cmath>
#include <stdexcept>

#include "slidegal/errors.hpp"

namespace slidegal
{

namespace
{

// sign(0) = 0: the symmetric (Filippov-average) convention on the surface.
double sign0(double v)
{
  if (v > 0.0) {
    return 1.0;
  }
  if (v < 0.0) {
    return -1.0;
  }
  return 0.0;
}

void require_transversal(double gamma_g)
{
  if (std::abs(gamma_g) <= kTransversalityTol) {
    throw TransversalityError(
      "sliding: gamma^T g is numerically zero; no sliding mode exists on this surface");
  }
}

double gain_at(const CovectorProjection & proj, const Vector & xi, const ControllerConfig & cfg)
{
  double u_gain = std::abs(dot(proj.gamma_A, xi)) + cfg.rho * std::abs(proj.gamma_g);
  if (cfg.u_max) {
    u_gain = std::min(u_gain, *cfg.u_max * std::abs(proj.gamma_g));
  }
  return u_gain;
}

}  // namespace

void ControllerConfig::validate() const
{
  const bool uses_rho = mode == ControlMode::relay || mode == ControlMode::boundary_layer;
  if (uses_rho && !(rho > 0.0)) {
    throw std::invalid_argument("controller: rho must be > 0");
  }
  if (mode == ControlMode::boundary_layer && !(delta > 0.0)) {
    throw std::invalid_argument("controller: delta must be > 0 for the boundary-layer law");
  }
  if (u_max && !(*u_max > 0.0)) {
    throw std::invalid_argument("controller: u_max must be > 0 when set");
  }
  if (mode == ControlMode::open_loop_constant && !std::isfinite(constant)) {
    throw std::invalid_argument("controller: open-loop constant must be finite");
  }
}

double sliding_output(const GalerkinSystem & sys, const Vector & xi)
{
  return dot(sys.gamma_vec, xi);
}

double equivalent_control(const GalerkinSystem & sys, const Vector & xi)
{
  const CovectorProjection proj = project_covector(sys);
  require_transversal(proj.gamma_g);
  return dot(proj.gamma_A, xi) / proj.gamma_g;
}

double gain(const GalerkinSystem & sys, const Vector & xi, const ControllerConfig & cfg)
{
  return gain_at(project_covector(sys), xi, cfg);
}

ControlSample eval_control(
  const GalerkinSystem & sys, const CovectorProjection & proj, const Vector & xi,
  const ControllerConfig & cfg)
{
  ControlSample s;
  s.z = sliding_output(sys, xi);

  const bool transversal = std::abs(proj.gamma_g) > kTransversalityTol;
  s.u_eq = transversal ? dot(proj.gamma_A, xi) / proj.gamma_g : 0.0;

  switch (cfg.mode) {
    case ControlMode::open_loop_zero:
      s.u = 0.0;
      break;
    case ControlMode::open_loop_constant:
      s.u = cfg.constant;
      break;
    case ControlMode::equivalent:
      require_transversal(proj.gamma_g);
      s.u = s.u_eq;
      break;
    case ControlMode::relay:
      require_transversal(proj.gamma_g);
      s.gain_U = gain_at(proj, xi, cfg);
      s.u = -s.gain_U * sign0(s.z) / proj.gamma_g;
      break;
    case ControlMode::boundary_layer:
      require_transversal(proj.gamma_g);
      s.gain_U = gain_at(proj, xi, cfg);
      s.u = -(s.gain_U / proj.gamma_g) * (s.z / (std::abs(s.z) + cfg.delta));
      break;
  }
  return s;
}

ControlSample relay_control(
  const GalerkinSystem & sys, const Vector & xi, const ControllerConfig & cfg)
{
  ControllerConfig c = cfg;
  c.mode = ControlMode::relay;
  c.validate();
  return eval_control(sys, project_covector(sys), xi, c);
}

ControlSample boundary_layer_control(
  const GalerkinSystem & sys, const Vector & xi, const ControllerConfig & cfg)
{
  ControllerConfig c = cfg;
  c.mode = ControlMode::boundary_layer;
  c.validate();
  return eval_control(sys, project_covector(sys), xi, c);
}

double reaching_time_bound(double z0, double rho, double gamma_g)
{
  if (!(rho > 0.0)) {
    throw std::invalid_argument("reaching_time_bound: rho must be > 0");
  }
  if (gamma_g == 0.0) {
    throw std::invalid_argument("reaching_time_bound: gamma_g must be nonzero");
  }
  return std::abs(z0) / (rho * std::abs(gamma_g));
}

}  // namespace slidegal
