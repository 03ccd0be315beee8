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

#include "qtrack/record_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qtrack {

namespace {

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());

  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

void write_record_csv(const std::string& path, const SimulationRecord& record) {
  std::ostringstream os;
  os << "t,eps_x,eps_y,eps_z,x,y,z,x_d,y_d,z_d,det_a,cond_a,norm,boundary_pop\n";
  for (const StepRecord& r : record.rows) {
    os << format_double(r.t) << ',' << format_double(r.eps_x) << ','
       << format_double(r.eps_y) << ',' << format_double(r.eps_z) << ','
       << format_double(r.x) << ',' << format_double(r.y) << ','
       << format_double(r.z) << ',' << format_double(r.x_d) << ','
       << format_double(r.y_d) << ',' << format_double(r.z_d) << ','
       << format_double(r.det_a) << ',' << format_double(r.cond_a) << ','
       << format_double(r.norm) << ',' << format_double(r.boundary_pop) << '\n';
  }
  write_file_atomic(path, os.str());
}

void write_record_summary(const std::string& path, const SimulationRecord& record,
                          const std::map<std::string, std::string>& extras) {
  std::ostringstream os;
  os << "status = " << run_status_name(record.status) << '\n';
  if (!record.ok()) {
    os << "failure_reason = " << record.failure_reason << '\n';
    os << "failed_step = " << record.failed_step << '\n';
  }
  os << "rows = " << record.rows.size() << '\n';
  os << "max_err_x = " << format_double(record.max_error[0]) << '\n';
  os << "max_err_y = " << format_double(record.max_error[1]) << '\n';
  os << "max_err_z = " << format_double(record.max_error[2]) << '\n';
  os << "rms_err_x = " << format_double(record.rms_error[0]) << '\n';
  os << "rms_err_y = " << format_double(record.rms_error[1]) << '\n';
  os << "rms_err_z = " << format_double(record.rms_error[2]) << '\n';
  os << "runtime_seconds = " << format_double(record.runtime_seconds) << '\n';
  os << "norm_drift_max = " << format_double(record.norm_drift_max) << '\n';
  os << "k_leakage_max = " << format_double(record.k_leakage_max) << '\n';
  os << "min_det_a = " << format_double(record.min_det) << '\n';
  os << "max_boundary_pop = " << format_double(record.max_boundary_pop) << '\n';
  os << "trace_defect_max = " << format_double(record.trace_defect_max) << '\n';
  os << "compat_value_offset_max = "
     << format_double(record.compatibility.value_offset.lpNorm<Eigen::Infinity>()) << '\n';
  os << "compat_velocity_offset_max = "
     << format_double(record.compatibility.velocity_offset.lpNorm<Eigen::Infinity>()) << '\n';
  os << "compat_warning = " << (record.compatibility_warning ? "true" : "false") << '\n';
  for (const auto& [key, value] : extras) {
    os << key << " = " << value << '\n';
  }
  write_file_atomic(path, os.str());
}

std::string run_status_name(RunStatus status) {
  switch (status) {
    case RunStatus::Ok: return "ok";
    case RunStatus::SingularityAbort: return "singularity_abort";
    case RunStatus::TruncationAbort: return "truncation_abort";
    case RunStatus::PropagationAbort: return "propagation_abort";
  }
  return "unknown";
}

}  // namespace qtrack
