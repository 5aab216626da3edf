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

#ifndef SLIDEGAL__DIAGNOSTICS_HPP_
#define SLIDEGAL__DIAGNOSTICS_HPP_

#include <utility>
#include <vector>

#include "slidegal/problem.hpp"
#include "slidegal/sim.hpp"

namespace slidegal
{

// Runtime verification of the convergence theorem's hypotheses on recorded
// trajectories: the control-norm growth condition, the energy inequality with
// its uniform bound, and a Cauchy-gap surrogate for the Galerkin limit.

/// Result of checking  |u|^2_{L2(0,t)} <= M int_0^t |y|^2 ds + N  at every
/// recorded sample (time integrals by trapezoid on the recorded grid).
struct GrowthCheck
{
  bool holds = false;
  double fitted_M = 0.0;       // least M that passes with N = 0
  double fitted_N = 0.0;       // least N that passes with the given M
  double worst_margin = 0.0;   // min over t of RHS - LHS
};

GrowthCheck check_growth(const Trajectory & traj, double big_m, double big_n);

/// (M, N) for which the active control law satisfies the growth condition by
/// construction: relay/layer gives M = 2 (|gamma_A| / |gamma_g|)^2 and
/// N = 2 rho^2 T; a saturation cap gives M = 0, N = T u_max^2; the equivalent
/// control M = 2 (|gamma_A| / |gamma_g|)^2, N = 0; open loop M = 0, N = T u^2.
std::pair<double, double> derived_growth_constants(
  const GalerkinSystem & sys, const ControllerConfig & cfg, double horizon);

/// Result of checking  |y(t)|^2 + alpha int_0^t [y]^2 ds <= c1 + c2 int_0^t
/// |y|^2 ds  with the constants assembled from the coercivity report:
/// c1 = |y(0)|^2 + (c^2/alpha) |u|^2_{L2(0,T)},  c2 = alpha + 2 |nu|.
struct EnergyCheck
{
  bool holds = false;
  std::vector<double> lhs;
  std::vector<double> rhs;
  double c1_used = 0.0;
  double c2_used = 0.0;
  double sup_h = 0.0;  // empirical uniform bound sup_t |y(t)|
};

EnergyCheck check_energy(const Trajectory & traj, const CoercivityReport & report);

/// First recorded time with |z| <= band, or with z of the opposite sign to
/// z(0); +inf when the surface is never approached.
double measured_reaching_time(const Trajectory & traj, double band);

/// sup |z| over recorded samples with t >= after_time (NaN if none).
double chatter_band(const Trajectory & traj, double after_time);

/// Per-dimension sweep results. pair_gaps[i] is the sup-over-time H-norm gap
/// between run i and the prefix of run i-1's refinement partner (NaN at i=0);
/// all lists are indexed like dims.
struct ConvergenceTable
{
  std::vector<int> dims;
  std::vector<double> pair_gaps;
  std::vector<double> sliding_sups;     // sup |z| past the measured reaching time
  std::vector<double> uniform_bounds;   // sup_t h_norm per dim
  std::vector<double> control_l2;       // |u|^2_{L2(0,T)} per dim
};

/// Runs the same closed-loop scenario at every dimension in `dims`
/// (non-decreasing, each able to represent gamma), with one shared assembly
/// quadrature sized for the largest dimension so that nested systems are
/// prefix-exact. Runs fan out across threads; `max_threads` caps the fan-out
/// (0 = hardware default).
ConvergenceTable convergence_study(
  const ProblemSpec & spec, const std::vector<int> & dims, const ControllerConfig & cfg,
  const SimConfig & sim, int max_threads = 0);

}  // namespace slidegal

#endif  // SLIDEGAL__DIAGNOSTICS_HPP_
