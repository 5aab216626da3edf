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

#include "slidegal/sim.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "slidegal/errors.hpp"
#include "slidegal/kernels.hpp"

namespace slidegal
{

namespace
{

double gershgorin_bound(const Matrix & a)
{
  double bound = 0.0;
  for (int i = 0; i < a.rows; ++i) {
    double row = 0.0;
    for (int j = 0; j < a.cols; ++j) {
      row += std::abs(a(i, j));
    }
    bound = std::max(bound, row);
  }
  return bound;
}

// xi' = -A xi + u g, u frozen over the step.
Vector rhs_of(const GalerkinSystem & sys, const Vector & xi, double u)
{
  Vector r = matvec(sys.A, xi);
  for (std::size_t j = 0; j < r.size(); ++j) {
    r[j] = -r[j] + u * sys.g_vec[j];
  }
  return r;
}

Vector rk4_step(const GalerkinSystem & sys, const Vector & xi, double u, double dt)
{
  const std::size_t n = xi.size();
  const Vector k1 = rhs_of(sys, xi, u);
  Vector tmp(n);
  for (std::size_t j = 0; j < n; ++j) {
    tmp[j] = xi[j] + 0.5 * dt * k1[j];
  }
  const Vector k2 = rhs_of(sys, tmp, u);
  for (std::size_t j = 0; j < n; ++j) {
    tmp[j] = xi[j] + 0.5 * dt * k2[j];
  }
  const Vector k3 = rhs_of(sys, tmp, u);
  for (std::size_t j = 0; j < n; ++j) {
    tmp[j] = xi[j] + dt * k3[j];
  }
  const Vector k4 = rhs_of(sys, tmp, u);
  Vector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = xi[j] + dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  }
  return out;
}

Matrix shifted_operator(const GalerkinSystem & sys, double dt)
{
  Matrix s = sys.M;
  for (std::size_t idx = 0; idx < s.data.size(); ++idx) {
    s.data[idx] += dt * sys.A.data[idx];
  }
  return s;
}

}  // namespace

void SimConfig::validate() const
{
  if (!(dt > 0.0)) {
    throw std::invalid_argument("sim: dt must be > 0");
  }
  if (record_stride < 1) {
    throw std::invalid_argument("sim: record_stride must be >= 1");
  }
}

Vector step_semi_implicit(const GalerkinSystem & sys, const Vector & xi, double u, double dt)
{
  if (static_cast<int>(xi.size()) != sys.n) {
    throw std::invalid_argument("step_semi_implicit: dimension mismatch");
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("step_semi_implicit: dt must be > 0");
  }
  const LuFactor lu(shifted_operator(sys, dt));
  Vector rhs = matvec(sys.M, xi);
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    rhs[j] += dt * u * sys.g_vec[j];
  }
  return lu.solve(rhs);
}

Trajectory simulate(
  const GalerkinSystem & sys, const ControllerConfig & cfg, const SimConfig & sim, double horizon)
{
  cfg.validate();
  sim.validate();
  if (!(horizon > 0.0)) {
    throw std::invalid_argument("simulate: horizon must be > 0");
  }

  const double dt = sim.dt;
  const long nsteps = std::max<long>(1, std::lround(horizon / dt));
  const CovectorProjection proj = project_covector(sys);

  // RK4 is only stable while dt * |eig(A)| stays inside its real-axis
  // stability interval; reject up front instead of diverging silently.
  std::unique_ptr<LuFactor> lu;
  if (sim.scheme == Scheme::semi_implicit) {
    lu = std::make_unique<LuFactor>(shifted_operator(sys, dt));
  } else {
    const double bound = gershgorin_bound(sys.A);
    if (dt * bound > 2.78) {
      throw std::invalid_argument(
        "simulate: explicit_rk4 unstable for dt = " + std::to_string(dt) +
        " (Gershgorin bound " + std::to_string(bound) + ")");
    }
  }

  Trajectory traj;
  traj.dt = dt;
  const std::size_t expected = static_cast<std::size_t>(nsteps / sim.record_stride) + 2;
  traj.times.reserve(expected);
  traj.states.reserve(expected);
  traj.controls.reserve(expected);
  traj.h_norms.reserve(expected);
  traj.seminorms.reserve(expected);
  traj.control_l2_running.reserve(expected);

  auto record = [&](long step, const Vector & xi, const ControlSample & c, double l2run) {
    traj.times.push_back(step * dt);
    traj.states.push_back(xi);
    traj.controls.push_back(c);
    traj.h_norms.push_back(h_norm(sys, xi));
    traj.seminorms.push_back(seminorm(sys, xi));
    traj.control_l2_running.push_back(l2run);
  };

  Vector xi = sys.xi0;
  double l2run = 0.0;
  for (long step = 0; step < nsteps; ++step) {
    const ControlSample c = eval_control(sys, proj, xi, cfg);
    if (step % sim.record_stride == 0) {
      record(step, xi, c, l2run);
    }
    if (sim.scheme == Scheme::semi_implicit) {
      Vector rhs = matvec(sys.M, xi);
      for (std::size_t j = 0; j < rhs.size(); ++j) {
        rhs[j] += dt * c.u * sys.g_vec[j];
      }
      xi = lu->solve(rhs);
    } else {
      xi = rk4_step(sys, xi, c.u, dt);
    }
    l2run += c.u * c.u * dt;
    // a finite Euclidean norm implies finite components and also trips on the
    // norm overflow that precedes a component overflow
    if (!std::isfinite(norm2(xi))) {
      throw DivergenceError(static_cast<int>(step + 1), std::move(traj));
    }
  }
  record(nsteps, xi, eval_control(sys, proj, xi, cfg), l2run);
  return traj;
}

Vector exact_modal_solution(const GalerkinSystem & sys, double u_const, double t)
{
  double offdiag = 0.0;
  for (int i = 0; i < sys.n; ++i) {
    for (int j = 0; j < sys.n; ++j) {
      if (i != j) {
        offdiag = std::max(offdiag, std::abs(sys.A(i, j)));
      }
    }
  }
  if (offdiag > 1e-12) {
    throw OracleError(
      "exact_modal_solution: A is not diagonal (max off-diagonal " + std::to_string(offdiag) +
      "); the modal oracle does not apply");
  }
  if (t < 0.0) {
    throw std::invalid_argument("exact_modal_solution: t must be >= 0");
  }

  Vector xi(static_cast<std::size_t>(sys.n));
  for (int j = 0; j < sys.n; ++j) {
    const double a = sys.A(j, j);
    const double x0 = sys.xi0[static_cast<std::size_t>(j)];
    const double gj = sys.g_vec[static_cast<std::size_t>(j)];
    // (1 - e^{-a t}) / a, with the a -> 0 limit t.
    const double resp = (a == 0.0) ? t : -std::expm1(-a * t) / a;
    xi[static_cast<std::size_t>(j)] = std::exp(-a * t) * x0 + u_const * gj * resp;
  }
  return xi;
}

}  // namespace slidegal
