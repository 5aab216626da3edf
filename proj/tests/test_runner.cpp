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

#include <cmath>
#include <stdexcept>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "slidegal/diagnostics.hpp"
#include "slidegal/errors.hpp"
#include "slidegal/runner.hpp"

using namespace slidegal;

namespace
{

std::vector<std::vector<std::string>> read_csv(const std::string & path)
{
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      cells.push_back(cell);
    }
    rows.push_back(cells);
  }
  return rows;
}

std::string slurp(const std::string & path)
{
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("runner")
{
  TEST_CASE("simulate command: free decay files and modal end value")
  {
    const RunConfig rc = parse_config(R"({
      "n_modes": 4, "T": 0.1, "dt": 1e-4, "gamma_cosine": [1.0], "g_right": 1.0,
      "y0_cosine": [0.0, 1.0], "out_prefix": "runner_decay"})");
    CHECK(cmd_simulate(rc) == 0);

    const auto rows = read_csv("runner_decay_traj.csv");
    REQUIRE(rows.size() >= 3);
    CHECK(rows[0] == std::vector<std::string>{"t", "z", "u", "gain", "u_eq", "h_norm",
                                              "seminorm", "ctrl_l2"});
    // z at t = 0 is gamma . xi0 = 0 for this covector/initial pair
    CHECK(std::stod(rows[1][1]) == 0.0);
    // final h_norm tracks the modal decay exp(-pi^2 T)
    const double h_final = std::stod(rows.back()[5]);
    CHECK(h_final == doctest::Approx(std::exp(-M_PI * M_PI * 0.1)).epsilon(2e-3));

    const auto field = read_csv("runner_decay_field.csv");
    CHECK(field.size() == 1 + 21 * 101);
    CHECK(field[0] == std::vector<std::string>{"t", "x", "y"});

    const std::string report = slurp("runner_decay_report.txt");
    CHECK(report.find("growth_check: holds=yes") != std::string::npos);
    CHECK(report.find("energy_check: holds=yes") != std::string::npos);
    CHECK(report.find("status: PASS") != std::string::npos);
  }

  TEST_CASE("simulate command: relay report contains a reaching time within the bound")
  {
    const RunConfig rc = parse_config(R"({
      "n_modes": 8, "T": 0.4, "dt": 1e-4,
      "gamma_cosine": [0.89442719099991586, 0.0, 0.44721359549995793],
      "g_right": 1.0, "y0_cosine": [0.44721359549995793, 0.0, 0.22360679774997896],
      "controller": {"mode": "relay", "rho": 2.0}, "out_prefix": "runner_relay"})");
    CHECK(cmd_simulate(rc) == 0);
    const std::string report = slurp("runner_relay_report.txt");
    const auto pos = report.find("reaching:");
    REQUIRE(pos != std::string::npos);
    double z0 = 0.0;
    double bound = 0.0;
    double measured = 0.0;
    REQUIRE(std::sscanf(report.c_str() + pos, "reaching: z0=%lf bound=%lf measured=%lf", &z0,
                        &bound, &measured) == 3);
    CHECK(z0 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(measured <= bound + 2.0 * rc.sim.dt);
  }

  TEST_CASE("simulate command: trajectory CSV round-trips bit-for-bit")
  {
    const std::string cfg_text = R"({
      "n_modes": 6, "T": 0.05, "dt": 1e-3,
      "gamma_cosine": [1.0, 0.0, 0.5], "g_right": 1.0,
      "y0_cosine": [0.3, 0.1, 0.2], "q_poly": [0.0, 0.5],
      "controller": {"mode": "relay", "rho": 1.5}, "out_prefix": "runner_bits"})";
    const RunConfig rc = parse_config(cfg_text);
    CHECK(cmd_simulate(rc) == 0);

    // recompute the same run in-process; assembly and integration are
    // deterministic, so every written cell must parse back to the same bits
    const GalerkinSystem sys = assemble(rc.spec, rc.n_modes, default_quadrature(rc.n_modes));
    const Trajectory traj = simulate(sys, rc.controller, rc.sim, rc.spec.horizon);
    const auto rows = read_csv("runner_bits_traj.csv");
    REQUIRE(rows.size() == traj.size() + 1);
    for (std::size_t i = 0; i < traj.size(); ++i) {
      const auto & row = rows[i + 1];
      REQUIRE(row.size() == 8);
      CHECK(std::stod(row[0]) == traj.times[i]);
      CHECK(std::stod(row[1]) == traj.controls[i].z);
      CHECK(std::stod(row[2]) == traj.controls[i].u);
      CHECK(std::stod(row[3]) == traj.controls[i].gain_U);
      CHECK(std::stod(row[4]) == traj.controls[i].u_eq);
      CHECK(std::stod(row[5]) == traj.h_norms[i]);
      CHECK(std::stod(row[6]) == traj.seminorms[i]);
      CHECK(std::stod(row[7]) == traj.control_l2_running[i]);
    }
  }

  TEST_CASE("simulate command: divergence flushes a partial record and fails")
  {
    const RunConfig rc = parse_config(R"({
      "n_modes": 2, "T": 0.5, "dt": 1e-4, "q_poly": [2000.0],
      "gamma_cosine": [1.0], "g_right": 1.0, "y0_cosine": [1.0],
      "out_prefix": "runner_blowup"})");
    CHECK(cmd_simulate(rc) == 2);
    std::ifstream in("runner_blowup_traj.csv");
    REQUIRE(in.good());
    std::string line;
    std::string last;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
      if (!line.empty()) {
        last = line;
        ++rows;
      }
    }
    CHECK(rows > 2);
    CHECK(last.find("# error:") == 0);
    CHECK(last.find("divergence") != std::string::npos);
    const std::string report = slurp("runner_blowup_report.txt");
    CHECK(report.find("status: FAIL") != std::string::npos);
  }

  TEST_CASE("simulate command: transversality violation raises the typed error")
  {
    const RunConfig rc = parse_config(R"({
      "n_modes": 4, "T": 0.1, "gamma_cosine": [1.0, 0.0, -0.70710678118654752],
      "g_right": 1.0, "controller": {"mode": "relay"}, "out_prefix": "runner_tv"})");
    CHECK_THROWS_AS(cmd_simulate(rc), TransversalityError);
  }

  TEST_CASE("converge command: CSV shape, duplicate dims, decoupled covector")
  {
    const RunConfig rc = parse_config(R"({
      "n_modes": 8, "T": 0.2, "dt": 1e-3, "gamma_cosine": [1.0], "g_right": 1.0,
      "y0_cosine": [0.4, 0.2, 0.1], "controller": {"mode": "relay", "rho": 2.0},
      "dims": [4, 4, 8, 16], "out_prefix": "runner_conv"})");
    CHECK(cmd_converge(rc) == 0);
    const auto rows = read_csv("runner_conv_converge.csv");
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"N", "pair_gap", "sliding_sup", "uniform_bound",
                                              "l2_control_norm"});
    CHECK(rows[1][1] == "nan");
    CHECK(std::stod(rows[2][1]) == 0.0);  // duplicated dimension
    // gamma = e_0 with q = 0 decouples: identical sliding sup at every N
    CHECK(rows[1][2] == rows[3][2]);
    CHECK(rows[1][2] == rows[4][2]);
  }

  TEST_CASE("converge command requires dims")
  {
    const RunConfig rc = parse_config(R"({
      "n_modes": 4, "T": 0.1, "gamma_cosine": [1.0], "g_right": 1.0,
      "out_prefix": "runner_nodims"})");
    CHECK_THROWS_AS(cmd_converge(rc), ConfigError);
  }

  TEST_CASE("check command verdicts")
  {
    const RunConfig good = parse_config(R"({
      "n_modes": 8, "T": 0.1, "q_poly": [0.0, 1.0], "gamma_cosine": [1.0, 0.0, 0.5],
      "g_right": 1.0, "controller": {"mode": "relay"}, "out_prefix": "runner_chk"})");
    CHECK(cmd_check(good) == 0);

    const RunConfig bad = parse_config(R"({
      "n_modes": 4, "T": 0.1, "gamma_cosine": [1.0, 0.0, -0.70710678118654752],
      "g_right": 1.0, "controller": {"mode": "relay"}, "out_prefix": "runner_chk2"})");
    CHECK(cmd_check(bad) == 1);
  }
}
