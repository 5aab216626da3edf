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

#include "slidegal/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>

#include "slidegal/diagnostics.hpp"
#include "slidegal/errors.hpp"
#include "slidegal/kernels.hpp"

namespace slidegal
{

namespace
{

std::ofstream open_out(const std::string & path)
{
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot write output file: " + path);
  }
  return out;
}

void write_traj_csv(const std::string & path, const Trajectory & traj, const std::string & trailer)
{
  std::ofstream out = open_out(path);
  out << "t,z,u,gain,u_eq,h_norm,seminorm,ctrl_l2\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const ControlSample & c = traj.controls[i];
    out << format_double(traj.times[i]) << ',' << format_double(c.z) << ','
        << format_double(c.u) << ',' << format_double(c.gain_U) << ','
        << format_double(c.u_eq) << ',' << format_double(traj.h_norms[i]) << ','
        << format_double(traj.seminorms[i]) << ','
        << format_double(traj.control_l2_running[i]) << '\n';
  }
  if (!trailer.empty()) {
    out << "# error: " << trailer << '\n';
  }
}

void write_field_csv(const std::string & path, const GalerkinSystem & sys, const Trajectory & traj)
{
  constexpr int kXPoints = 101;
  constexpr int kSnapshots = 21;
  std::vector<double> xs(kXPoints);
  for (int j = 0; j < kXPoints; ++j) {
    xs[static_cast<std::size_t>(j)] = static_cast<double>(j) / (kXPoints - 1);
  }
  std::ofstream out = open_out(path);
  out << "t,x,y\n";
  if (traj.size() == 0) {
    return;
  }
  for (int k = 0; k < kSnapshots; ++k) {
    const std::size_t idx = static_cast<std::size_t>(
      std::lround(static_cast<double>(k) * (traj.size() - 1) / (kSnapshots - 1)));
    const Vector values = reconstruct(sys, traj.states[idx], xs);
    for (int j = 0; j < kXPoints; ++j) {
      out << format_double(traj.times[idx]) << ',' << format_double(xs[static_cast<std::size_t>(j)])
          << ',' << format_double(values[static_cast<std::size_t>(j)]) << '\n';
    }
  }
}

const char * mode_name(ControlMode m)
{
  switch (m) {
    case ControlMode::relay: return "relay";
    case ControlMode::boundary_layer: return "boundary_layer";
    case ControlMode::equivalent: return "equivalent";
    case ControlMode::open_loop_zero: return "open_loop_zero";
    case ControlMode::open_loop_constant: return "open_loop_constant";
  }
  return "?";
}

void write_coercivity(std::ostream & out, const CoercivityReport & rep)
{
  out << "coercivity: alpha=" << format_double(rep.alpha) << " nu=" << format_double(rep.nu)
      << " sup_q=" << format_double(rep.sup_q)
      << " lambda=" << format_double(rep.lambda_vnorm)
      << " beta=" << format_double(rep.beta_vnorm)
      << " trace_c2=" << format_double(rep.trace_constant_estimate)
      << " transversality=" << format_double(rep.transversality) << '\n';
}

int env_thread_cap()
{
  const char * env = std::getenv("SLIDEGAL_THREADS");
  if (env == nullptr) {
    return 0;
  }
  const int v = std::atoi(env);
  return v > 0 ? v : 0;
}

}  // namespace

std::string format_double(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_simulate(const RunConfig & rc)
{
  const CoercivityReport report = analyze(rc.spec, std::max(2, rc.n_modes));
  const GalerkinSystem sys = assemble(rc.spec, rc.n_modes, default_quadrature(rc.n_modes));
  const CovectorProjection proj = project_covector(sys);

  Trajectory traj;
  std::string divergence;
  try {
    traj = simulate(sys, rc.controller, rc.sim, rc.spec.horizon);
  } catch (const DivergenceError & e) {
    traj = e.partial();
    divergence = e.what();
  }

  write_traj_csv(rc.out_prefix + "_traj.csv", traj, divergence);
  write_field_csv(rc.out_prefix + "_field.csv", sys, traj);

  const bool needs_surface = rc.controller.mode == ControlMode::relay ||
                             rc.controller.mode == ControlMode::boundary_layer;
  const double band = rc.controller.mode == ControlMode::boundary_layer ? rc.controller.delta : 0.0;
  const double reach = traj.size() ? measured_reaching_time(traj, band)
                                   : std::numeric_limits<double>::infinity();
  const double chatter = chatter_band(traj, reach);

  const auto [grow_m, grow_n] = derived_growth_constants(sys, rc.controller, rc.spec.horizon);
  GrowthCheck growth;
  EnergyCheck energy;
  if (traj.size() > 0) {
    growth = check_growth(traj, grow_m, grow_n);
    energy = check_energy(traj, report);
  }

  std::ofstream out = open_out(rc.out_prefix + "_report.txt");
  out << "slidegal simulate report\n";
  out << "n_modes=" << rc.n_modes << " dt=" << format_double(rc.sim.dt)
      << " T=" << format_double(rc.spec.horizon)
      << " scheme=" << (rc.sim.scheme == Scheme::semi_implicit ? "semi_implicit" : "explicit_rk4")
      << " stride=" << rc.sim.record_stride << '\n';
  write_coercivity(out, report);
  out << "controller: mode=" << mode_name(rc.controller.mode)
      << " rho=" << format_double(rc.controller.rho)
      << " delta=" << format_double(rc.controller.delta);
  if (rc.controller.u_max) {
    out << " u_max=" << format_double(*rc.controller.u_max);
  }
  out << '\n';
  if (needs_surface && traj.size() > 0) {
    const double z0 = traj.controls.front().z;
    out << "reaching: z0=" << format_double(z0)
        << " bound=" << format_double(reaching_time_bound(z0, rc.controller.rho, proj.gamma_g))
        << " measured=" << format_double(reach) << " band_used=" << format_double(band) << '\n';
    out << "chatter_band=" << format_double(chatter) << '\n';
  }
  out << "growth_check: holds=" << (growth.holds ? "yes" : "no")
      << " M=" << format_double(grow_m) << " N=" << format_double(grow_n)
      << " worst_margin=" << format_double(growth.worst_margin)
      << " fitted_M=" << format_double(growth.fitted_M)
      << " fitted_N=" << format_double(growth.fitted_N) << '\n';
  out << "energy_check: holds=" << (energy.holds ? "yes" : "no")
      << " c1=" << format_double(energy.c1_used) << " c2=" << format_double(energy.c2_used)
      << " sup_h=" << format_double(energy.sup_h) << '\n';
  if (!divergence.empty()) {
    out << "status: FAIL (" << divergence << ")\n";
    return 2;
  }
  const bool ok = growth.holds && energy.holds;
  out << "status: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

int cmd_converge(const RunConfig & rc)
{
  if (rc.dims.empty()) {
    throw ConfigError("converge: dims is required");
  }
  const ConvergenceTable table =
    convergence_study(rc.spec, rc.dims, rc.controller, rc.sim, env_thread_cap());

  std::ofstream out = open_out(rc.out_prefix + "_converge.csv");
  out << "N,pair_gap,sliding_sup,uniform_bound,l2_control_norm\n";
  for (std::size_t i = 0; i < table.dims.size(); ++i) {
    out << table.dims[i] << ',' << format_double(table.pair_gaps[i]) << ','
        << format_double(table.sliding_sups[i]) << ',' << format_double(table.uniform_bounds[i])
        << ',' << format_double(table.control_l2[i]) << '\n';
  }
  for (std::size_t i = 0; i < table.dims.size(); ++i) {
    std::cout << "N=" << table.dims[i] << " pair_gap=" << format_double(table.pair_gaps[i])
              << " sliding_sup=" << format_double(table.sliding_sups[i])
              << " uniform_bound=" << format_double(table.uniform_bounds[i]) << '\n';
  }
  return 0;
}

int cmd_check(const RunConfig & rc)
{
  const CoercivityReport report = analyze(rc.spec, std::max(2, rc.n_modes));
  write_coercivity(std::cout, report);

  const Quadrature quad = default_quadrature(rc.n_modes);
  const GalerkinSystem sys = assemble(rc.spec, rc.n_modes, quad);

  bool ok = true;
  auto verdict = [&](const char * what, bool pass) {
    std::cout << (pass ? "PASS " : "FAIL ") << what << '\n';
    ok = ok && pass;
  };

  double mass_err = 0.0;
  double asym = 0.0;
  double k_err = 0.0;
  for (int i = 0; i < sys.n; ++i) {
    for (int j = 0; j < sys.n; ++j) {
      mass_err = std::max(mass_err, std::abs(sys.M(i, j) - (i == j ? 1.0 : 0.0)));
      asym = std::max(asym, std::abs(sys.A(i, j) - sys.A(j, i)));
      const double kexp = (i == j) ? (i * M_PI) * (i * M_PI) : 0.0;
      k_err = std::max(k_err, std::abs(sys.K(i, j) - kexp));
    }
  }
  verdict("mass matrix is the identity (1e-12)", mass_err <= 1e-12);
  verdict("A symmetric (1e-12)", asym < 1e-12);
  verdict("K = diag((j pi)^2), K[0][0] = 0", k_err <= 1e-12 && sys.K(0, 0) == 0.0);

  std::mt19937 rng(0xC0FFEE);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  bool coercive_ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    Vector xi(static_cast<std::size_t>(sys.n));
    for (auto & v : xi) {
      v = unif(rng);
    }
    const double xa = quadratic_form(sys.A, xi);
    const double xk = quadratic_form(sys.K, xi);
    const double xx = dot(xi, xi);
    if (xa < xk - sys.sup_q * xx - 1e-9 * (1.0 + xk + std::abs(sys.sup_q) * xx)) {
      coercive_ok = false;
      break;
    }
  }
  verdict("discrete coercivity xi'A xi >= xi'K xi - sup_q |xi|^2", coercive_ok);

  if (rc.n_modes >= 2) {
    const GalerkinSystem half = assemble(rc.spec, rc.n_modes / 2 + 1, quad);
    bool nested = true;
    for (int i = 0; i < half.n && nested; ++i) {
      for (int j = 0; j < half.n; ++j) {
        if (sys.A(i, j) != half.A(i, j)) {
          nested = false;
          break;
        }
      }
    }
    verdict("nesting: lower-dimensional system is the leading block", nested);
  }

  const bool needs_surface = rc.controller.mode == ControlMode::relay ||
                             rc.controller.mode == ControlMode::boundary_layer ||
                             rc.controller.mode == ControlMode::equivalent;
  if (needs_surface) {
    const CovectorProjection proj = project_covector(sys);
    verdict("transversality gamma^T g != 0", std::abs(proj.gamma_g) > kTransversalityTol);
  }

  std::cout << "status: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

}  // namespace slidegal
