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

#include <map>
#include <string>

#include "qtrack/simulator.hpp"

namespace qtrack {

/// CSV record, one row per grid point. Columns, in order:
///   t, eps_x, eps_y, eps_z, x, y, z, x_d, y_d, z_d, det_a, cond_a, norm,
///   boundary_pop
/// Values are printed with 17 significant digits so they round-trip exactly.
/// Files are written atomically (temp + rename).
void write_record_csv(const std::string& path, const SimulationRecord& record);

/// Sidecar "key = value" summary. `extras` entries are appended verbatim.
void write_record_summary(const std::string& path, const SimulationRecord& record,
                          const std::map<std::string, std::string>& extras = {});

/// Atomic text-file write helper used by all output paths.
void write_file_atomic(const std::string& path, const std::string& contents);

std::string run_status_name(RunStatus status);

}  // namespace qtrack
