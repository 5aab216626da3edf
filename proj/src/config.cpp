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

#include "slidegal/config.hpp"

#include <cmath>
#include <set>

#include "json.hpp"

#include "slidegal/errors.hpp"

namespace slidegal
{

namespace
{

using nlohmann::json;

void reject_unknown_keys(const json & obj, const std::set<std::string> & allowed, const char * where)
{
  std::string unknown;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      if (!unknown.empty()) {
        unknown += ", ";
      }
      unknown += it.key();
    }
  }
  if (!unknown.empty()) {
    throw ConfigError(std::string("config: unknown key(s) in ") + where + ": " + unknown);
  }
}

double as_double(const json & j, const std::string & key)
{
  if (!j.at(key).is_number()) {
    throw ConfigError("config: " + key + " must be a number");
  }
  return j.at(key).get<double>();
}

std::vector<double> as_double_array(const json & j, const std::string & key)
{
  const json & a = j.at(key);
  if (!a.is_array() || a.empty()) {
    throw ConfigError("config: " + key + " must be a nonempty array of numbers");
  }
  std::vector<double> out;
  for (const auto & v : a) {
    if (!v.is_number()) {
      throw ConfigError("config: " + key + " must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

ScalarField field_from(const json & j, const char * poly_key, const char * cos_key,
                       ScalarField fallback)
{
  const bool has_poly = j.contains(poly_key);
  const bool has_cos = j.contains(cos_key);
  if (has_poly && has_cos) {
    throw ConfigError(
      std::string("config: give at most one of ") + poly_key + " and " + cos_key);
  }
  if (has_poly) {
    return ScalarField::polynomial(as_double_array(j, poly_key));
  }
  if (has_cos) {
    return ScalarField::cosine(as_double_array(j, cos_key));
  }
  return fallback;
}

}  // namespace

RunConfig parse_config(const std::string & text)
{
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error & e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("config: document must be a JSON object");
  }

  reject_unknown_keys(
    j,
    {"n_modes", "T", "dt", "scheme", "q_poly", "q_cosine", "g_left", "g_right", "gamma_cosine",
     "y0_poly", "y0_cosine", "controller", "dims", "out_prefix"},
    "the top level");

  RunConfig rc;

  if (!j.contains("n_modes")) {
    throw ConfigError("config: n_modes is required");
  }
  if (!j.at("n_modes").is_number_integer() || j.at("n_modes").get<long>() < 1) {
    throw ConfigError("config: n_modes must be an integer >= 1");
  }
  rc.n_modes = j.at("n_modes").get<int>();

  if (!j.contains("T")) {
    throw ConfigError("config: T is required");
  }
  rc.spec.horizon = as_double(j, "T");
  if (!(rc.spec.horizon > 0.0)) {
    throw ConfigError("config: T must be > 0");
  }

  if (j.contains("dt")) {
    rc.sim.dt = as_double(j, "dt");
    if (!(rc.sim.dt > 0.0)) {
      throw ConfigError("config: dt must be > 0");
    }
  }

  if (j.contains("scheme")) {
    const std::string s = j.at("scheme").is_string() ? j.at("scheme").get<std::string>() : "";
    if (s == "semi_implicit") {
      rc.sim.scheme = Scheme::semi_implicit;
    } else if (s == "explicit_rk4") {
      rc.sim.scheme = Scheme::explicit_rk4;
    } else {
      throw ConfigError("config: scheme must be \"semi_implicit\" or \"explicit_rk4\"");
    }
  }

  rc.spec.q = field_from(j, "q_poly", "q_cosine", ScalarField::polynomial({0.0}));
  rc.spec.y0 = field_from(j, "y0_poly", "y0_cosine", ScalarField::polynomial({0.0}));

  if (!j.contains("gamma_cosine")) {
    throw ConfigError("config: gamma_cosine is required");
  }
  rc.spec.gamma = ScalarField::cosine(as_double_array(j, "gamma_cosine"));

  if (j.contains("g_left")) {
    rc.spec.g.left = as_double(j, "g_left");
  }
  if (j.contains("g_right")) {
    rc.spec.g.right = as_double(j, "g_right");
  }

  if (j.contains("controller")) {
    const json & c = j.at("controller");
    if (!c.is_object()) {
      throw ConfigError("config: controller must be an object");
    }
    reject_unknown_keys(c, {"mode", "rho", "delta", "u_max", "value"}, "controller");
    if (c.contains("mode")) {
      const std::string m = c.at("mode").is_string() ? c.at("mode").get<std::string>() : "";
      if (m == "relay") {
        rc.controller.mode = ControlMode::relay;
      } else if (m == "boundary_layer") {
        rc.controller.mode = ControlMode::boundary_layer;
      } else if (m == "equivalent") {
        rc.controller.mode = ControlMode::equivalent;
      } else if (m == "open_loop_zero") {
        rc.controller.mode = ControlMode::open_loop_zero;
      } else if (m == "open_loop_constant") {
        rc.controller.mode = ControlMode::open_loop_constant;
      } else {
        throw ConfigError("config: controller.mode \"" + m + "\" is not a control mode");
      }
    }
    if (c.contains("rho")) {
      rc.controller.rho = as_double(c, "rho");
    }
    if (c.contains("delta")) {
      rc.controller.delta = as_double(c, "delta");
    }
    if (c.contains("u_max")) {
      rc.controller.u_max = as_double(c, "u_max");
    }
    if (c.contains("value")) {
      rc.controller.constant = as_double(c, "value");
    }
  }

  if (j.contains("dims")) {
    const json & d = j.at("dims");
    if (!d.is_array() || d.empty()) {
      throw ConfigError("config: dims must be a nonempty array of integers");
    }
    for (const auto & v : d) {
      if (!v.is_number_integer() || v.get<long>() < 1) {
        throw ConfigError("config: dims must contain integers >= 1");
      }
      rc.dims.push_back(v.get<int>());
    }
    for (std::size_t i = 1; i < rc.dims.size(); ++i) {
      if (rc.dims[i] < rc.dims[i - 1]) {
        throw ConfigError("config: dims must be non-decreasing");
      }
    }
  }

  if (j.contains("out_prefix")) {
    if (!j.at("out_prefix").is_string() || j.at("out_prefix").get<std::string>().empty()) {
      throw ConfigError("config: out_prefix must be a nonempty string");
    }
    rc.out_prefix = j.at("out_prefix").get<std::string>();
  }

  // Cross-field invariants, with the same wording the library uses.
  try {
    rc.spec.validate();
    rc.controller.validate();
    rc.sim.validate();
  } catch (const std::exception & e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  const int gamma_modes = rc.spec.gamma.highest_index() + 1;
  if (rc.n_modes < gamma_modes) {
    throw ConfigError(
      "config: sliding covector not representable in n_modes=" + std::to_string(rc.n_modes) +
      " (gamma_cosine needs " + std::to_string(gamma_modes) + " modes)");
  }
  for (int d : rc.dims) {
    if (d < gamma_modes) {
      throw ConfigError(
        "config: sliding covector not representable in dims entry " + std::to_string(d));
    }
  }

  // Keep at most 10001 recorded samples per run.
  const long nsteps = std::max<long>(1, std::lround(rc.spec.horizon / rc.sim.dt));
  rc.sim.record_stride = static_cast<int>((nsteps + 9999) / 10000);
  return rc;
}

}  // namespace slidegal
