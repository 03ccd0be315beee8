/* Copyright 2026 The Qtrack Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qtrack/config.hpp"
#include "qtrack/errors.hpp"
#include "qtrack/units.hpp"

using namespace qtrack;

namespace {

std::string write_temp_config(const std::string& contents, const std::string& name) {
  const std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path);
  out << contents;
  return path;
}

const char* kGoodConfig = R"(# fluoromethane demo
[molecule]
kind = symmetric_top
b_cm1 = 5.182
c_cm1 = 0.852
mu_debye = 1.847

[basis]
jmax = 12

[initial]
states = 0,0,0 ; 1,0,0 ; 1,1,0 ; 2,0,0

[tracks]
kind = gaussian_sinusoid
amplitude = 0.2

[grid]
horizon_b = 5.0
steps = 10000

[output]
dir = out_demo
prefix = fluoromethane
)";

}  // namespace

TEST_SUITE("config") {

TEST_CASE("parses a full config") {
  const std::string path = write_temp_config(kGoodConfig, "qtrack_good.ini");
  const RunRequest request = parse_config_file(path);
  std::remove(path.c_str());

  REQUIRE(request.runs.size() == 4);
  CHECK(request.initial_states[2] == BasisState{1, 1, 0});
  const SimulationConfig& config = request.runs[0];
  CHECK(config.rotor.jmax == 12);
  CHECK(config.rotor.b == 1.0);  // nondimensional
  CHECK(config.rotor.c == doctest::Approx(0.852 / 5.182).epsilon(1e-15));
  CHECK(config.horizon == 5.0);
  CHECK(config.steps == 10000);
  CHECK(config.guard == 1e8);
  CHECK(config.boundary_tol == 1e-8);
  CHECK(request.output_dir == "out_demo");
  CHECK(request.prefix == "fluoromethane");
  CHECK(request.plots);

  // The default track family: x component peaks at 0.8 * horizon.
  CHECK(config.tracks.x.value(4.0) ==
        doctest::Approx(0.2 * std::sin(8.0 * 4.0)).epsilon(1e-12));
}

TEST_CASE("unknown keys are hard errors with line diagnostics") {
  const std::string bad = std::string(kGoodConfig) + "\n[grid2]\nfoo = 1\n";
  const std::string path = write_temp_config(bad, "qtrack_bad_section.ini");
  CHECK_THROWS_AS(parse_config_file(path), ConfigError);
  std::remove(path.c_str());

  const std::string typo = R"([molecule]
kind = symmetric_top
b_cm1 = 5.182
c_cm1 = 0.852
mu_debye = 1.847
mu_debye_typo = 1.0
[initial]
state = 0,0,0
)";
  const std::string path2 = write_temp_config(typo, "qtrack_bad_key.ini");
  try {
    parse_config_file(path2);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line == 6);
    CHECK(std::string(e.what()).find("mu_debye_typo") != std::string::npos);
  }
  std::remove(path2.c_str());
}

TEST_CASE("missing required keys and malformed values") {
  const std::string no_mu = R"([molecule]
kind = symmetric_top
b_cm1 = 5.182
c_cm1 = 0.852
[initial]
state = 0,0,0
)";
  const std::string p1 = write_temp_config(no_mu, "qtrack_no_mu.ini");
  CHECK_THROWS_AS(parse_config_file(p1), ConfigError);
  std::remove(p1.c_str());

  const std::string bad_state = R"([molecule]
kind = linear
b_cm1 = 5.182
mu_debye = 1.847
[initial]
state = 0;0;0
)";
  const std::string p2 = write_temp_config(bad_state, "qtrack_bad_state.ini");
  CHECK_THROWS_AS(parse_config_file(p2), ConfigError);
  std::remove(p2.c_str());

  CHECK_THROWS_AS(parse_config_file("/nonexistent/qtrack.ini"), ConfigError);
}

TEST_CASE("linear kind never requires c") {
  const std::string linear = R"([molecule]
kind = linear
b_cm1 = 2.0
mu_debye = 1.0
[initial]
state = 0,0,0
)";
  const std::string path = write_temp_config(linear, "qtrack_linear.ini");
  const RunRequest request = parse_config_file(path);
  std::remove(path.c_str());
  CHECK(request.runs[0].rotor.kind == RotorKind::Linear);
}

TEST_CASE("overrides") {
  const std::string path = write_temp_config(kGoodConfig, "qtrack_override.ini");
  RunRequest request = parse_config_file(path);
  std::remove(path.c_str());

  ConfigOverrides overrides;
  overrides.jmax = 2;
  overrides.steps = 100;
  overrides.initials = {BasisState{1, 1, 0}};
  overrides.output_dir = "elsewhere";
  overrides.no_plots = true;
  apply_overrides(request, overrides);

  REQUIRE(request.runs.size() == 1);
  CHECK(request.runs[0].rotor.jmax == 2);
  CHECK(request.runs[0].steps == 100);
  CHECK(request.runs[0].initial_state == BasisState{1, 1, 0});
  CHECK(request.output_dir == "elsewhere");
  CHECK_FALSE(request.plots);
}

TEST_CASE("unit conversions round-trip") {
  for (double v : {0.01, 1.0, 5.182, 123.4}) {
    CHECK(units::joule_to_cm1(units::cm1_to_joule(v)) == doctest::Approx(v).epsilon(1e-12));
  }
  // One field unit for fluoromethane, sanity order of magnitude (MV/m).
  const double field = units::field_unit_volts_per_meter(5.182, 1.847);
  CHECK(field == doctest::Approx(1.6708e7).epsilon(1e-3));
  // One time unit ~ 1 ps.
  CHECK(units::time_unit_seconds(5.182) == doctest::Approx(1.0245e-12).epsilon(1e-3));
}

}  // TEST_SUITE
