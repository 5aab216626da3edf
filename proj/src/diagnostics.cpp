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

#include "slidegal/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slidegal
{

namespace
{

// Cumulative trapezoid of v^2 on the recorded (possibly strided) grid.
std::vector<double> cumtrapz_sq(const std::vector<double> & t, const std::vector<double> & v)
{
  std::vector<double> out(t.size(), 0.0);
  for (std::size_t i = 1; i < t.size(); ++i) {
    out[i] = out[i - 1] + 0.5 * (t[i] - t[i - 1]) * (v[i] * v[i] + v[i - 1] * v[i - 1]);
  }
  return out;
}

}  // namespace

GrowthCheck check_growth(const Trajectory & traj, double big_m, double big_n)
{
  if (traj.size() == 0) {
    throw std::invalid_argument("check_growth: empty trajectory");
  }
  const std::vector<double> state_l2 = cumtrapz_sq(traj.times, traj.h_norms);

  GrowthCheck res;
  res.worst_margin = std::numeric_limits<double>::infinity();
  double fitted_n = 0.0;
  double fitted_m = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double lhs = traj.control_l2_running[i];
    const double rhs = big_m * state_l2[i] + big_n;
    res.worst_margin = std::min(res.worst_margin, rhs - lhs);
    fitted_n = std::max(fitted_n, lhs - big_m * state_l2[i]);
    if (state_l2[i] > 0.0) {
      fitted_m = std::max(fitted_m, lhs / state_l2[i]);
    } else if (lhs > 0.0) {
      fitted_m = std::numeric_limits<double>::infinity();
    }
  }
  res.holds = res.worst_margin >= 0.0;
  res.fitted_N = fitted_n;
  res.fitted_M = fitted_m;
  return res;
}

std::pair<double, double> derived_growth_constants(
  const GalerkinSystem & sys, const ControllerConfig & cfg, double horizon)
{
  // The constants certify the recorded running sums, so they carry a relative
  // headroom for the accumulated roundoff of sum(u_i^2 dt) over the grid
  // (n * eps with n up to ~1e6 steps stays far below 1e-9).
  constexpr double kRound = 1.0 + 1e-9;
  switch (cfg.mode) {
    case ControlMode::open_loop_zero:
      return {0.0, 0.0};
    case ControlMode::open_loop_constant:
      return {0.0, horizon * cfg.constant * cfg.constant * kRound};
    default:
      break;
  }
  const CovectorProjection proj = project_covector(sys);
  if ((cfg.mode == ControlMode::relay || cfg.mode == ControlMode::boundary_layer) && cfg.u_max) {
    return {0.0, horizon * *cfg.u_max * *cfg.u_max * kRound};
  }
  const double ratio = norm2(proj.gamma_A) / std::abs(proj.gamma_g);
  const double m = 2.0 * ratio * ratio * kRound;
  if (cfg.mode == ControlMode::equivalent) {
    return {m, 0.0};
  }
  return {m, 2.0 * cfg.rho * cfg.rho * horizon * kRound};
}

EnergyCheck check_energy(const Trajectory & traj, const CoercivityReport & report)
{
  if (traj.size() == 0) {
    throw std::invalid_argument("check_energy: empty trajectory");
  }
  const std::vector<double> state_l2 = cumtrapz_sq(traj.times, traj.h_norms);
  const std::vector<double> semi_l2 = cumtrapz_sq(traj.times, traj.seminorms);

  EnergyCheck res;
  const double h0 = traj.h_norms.front();
  const double u_l2_total = traj.control_l2_running.back();
  res.c1_used = h0 * h0 + report.trace_constant_estimate / report.alpha * u_l2_total;
  res.c2_used = report.alpha + 2.0 * std::abs(report.nu);

  res.lhs.resize(traj.size());
  res.rhs.resize(traj.size());
  res.holds = true;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double h = traj.h_norms[i];
    res.lhs[i] = h * h + report.alpha * semi_l2[i];
    res.rhs[i] = res.c1_used + res.c2_used * state_l2[i];
    if (res.lhs[i] > res.rhs[i]) {
      res.holds = false;
    }
    res.sup_h = std::max(res.sup_h, h);
  }
  return res;
}

double measured_reaching_time(const Trajectory & traj, double band)
{
  if (traj.size() == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const double z0 = traj.controls.front().z;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double z = traj.controls[i].z;
    if (std::abs(z) <= band || z * z0 < 0.0) {
      return traj.times[i];
    }
  }
  return std::numeric_limits<double>::infinity();
}

double chatter_band(const Trajectory & traj, double after_time)
{
  double band = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (traj.times[i] >= after_time) {
      const double a = std::abs(traj.controls[i].z);
      band = std::isnan(band) ? a : std::max(band, a);
    }
  }
  return band;
}

ConvergenceTable convergence_study(
  const ProblemSpec & spec, const std::vector<int> & dims, const ControllerConfig & cfg,
  const SimConfig & sim, int max_threads)
{
  spec.validate();
  if (dims.empty()) {
    throw std::invalid_argument("convergence_study: dims must be nonempty");
  }
  const int gamma_modes = spec.gamma.highest_index() + 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < gamma_modes) {
      throw std::invalid_argument(
        "convergence_study: dimension " + std::to_string(dims[i]) +
        " cannot represent the sliding covector");
    }
    if (i > 0 && dims[i] < dims[i - 1]) {
      throw std::invalid_argument("convergence_study: dims must be non-decreasing");
    }
  }

  // One shared quadrature sized for the largest dimension keeps the nested
  // systems prefix-exact across the sweep.
  const int max_dim = dims.back();
  const Quadrature quad = gauss_legendre(8, std::max(4, max_dim));

  const int runs = static_cast<int>(dims.size());
  std::vector<Trajectory> trajs(static_cast<std::size_t>(runs));
  std::vector<std::string> errors(static_cast<std::size_t>(runs));

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (max_threads > 0) {
    threads = std::min(threads, max_threads);
  }

#pragma omp parallel for schedule(dynamic) num_threads(threads) if (runs > 1)
  for (int r = 0; r < runs; ++r) {
    try {
      const GalerkinSystem sys = assemble(spec, dims[static_cast<std::size_t>(r)], quad);
      trajs[static_cast<std::size_t>(r)] = simulate(sys, cfg, sim, spec.horizon);
    } catch (const std::exception & e) {
      errors[static_cast<std::size_t>(r)] = e.what();
    }
  }
  for (int r = 0; r < runs; ++r) {
    if (!errors[static_cast<std::size_t>(r)].empty()) {
      throw std::runtime_error(
        "convergence_study: dimension " + std::to_string(dims[static_cast<std::size_t>(r)]) +
        ": " + errors[static_cast<std::size_t>(r)]);
    }
  }

  ConvergenceTable table;
  table.dims = dims;
  table.pair_gaps.assign(dims.size(), std::numeric_limits<double>::quiet_NaN());
  table.sliding_sups.resize(dims.size());
  table.uniform_bounds.resize(dims.size());
  table.control_l2.resize(dims.size());

  const double reach_band = (cfg.mode == ControlMode::boundary_layer) ? cfg.delta : 0.0;
  for (std::size_t r = 0; r < dims.size(); ++r) {
    const Trajectory & traj = trajs[r];
    table.uniform_bounds[r] = *std::max_element(traj.h_norms.begin(), traj.h_norms.end());
    table.control_l2[r] = traj.control_l2_running.back();
    table.sliding_sups[r] = chatter_band(traj, measured_reaching_time(traj, reach_band));

    if (r > 0) {
      const Trajectory & coarse = trajs[r - 1];
      const int nc = dims[r - 1];
      double gap = 0.0;
      for (std::size_t i = 0; i < traj.size(); ++i) {
        double d2 = 0.0;
        for (int j = 0; j < nc; ++j) {
          const double d = traj.states[i][static_cast<std::size_t>(j)] -
                           coarse.states[i][static_cast<std::size_t>(j)];
          d2 += d * d;
        }
        gap = std::max(gap, std::sqrt(d2));
      }
      table.pair_gaps[r] = gap;
    }
  }
  return table;
}

}  // namespace slidegal
