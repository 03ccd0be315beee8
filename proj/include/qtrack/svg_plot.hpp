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

#pragma once

#include <string>

#include "qtrack/simulator.hpp"

namespace qtrack {

/// Three stacked field-vs-time panels (eps_x, eps_y, eps_z against tau = b*t),
/// written as a standalone SVG file.
void write_fields_svg(const std::string& path, const SimulationRecord& record,
                      const std::string& title);

/// Orthographic 3D view of the orientation trajectory inside the unit sphere:
/// designated track in black, achieved expectation in color.
void write_orbit_svg(const std::string& path, const SimulationRecord& record,
                     const std::string& title);

}  // namespace qtrack
