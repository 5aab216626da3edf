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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "slidegal/errors.hpp"
#include "slidegal/runner.hpp"

namespace
{

slidegal::RunConfig load(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw slidegal::ConfigError("cannot read config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return slidegal::parse_config(buf.str());
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Galerkin sliding-mode control experiments for the boundary-controlled heat equation"};
  app.require_subcommand(1);

  std::string sim_cfg;
  std::string conv_cfg;
  std::string check_cfg;
  CLI::App * sim = app.add_subcommand("simulate", "run one closed-loop simulation");
  sim->add_option("config", sim_cfg, "JSON config file")->required();
  CLI::App * conv = app.add_subcommand("converge", "run the Galerkin dimension sweep");
  conv->add_option("config", conv_cfg, "JSON config file")->required();
  CLI::App * chk = app.add_subcommand("check", "run analyze and the assembly invariants");
  chk->add_option("config", check_cfg, "JSON config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      return slidegal::cmd_simulate(load(sim_cfg));
    }
    if (conv->parsed()) {
      return slidegal::cmd_converge(load(conv_cfg));
    }
    return slidegal::cmd_check(load(check_cfg));
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
