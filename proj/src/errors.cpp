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

#include "qtrack/errors.hpp"

#include <sstream>

namespace qtrack {

namespace {

std::string format_singularity(double t, double det, double cond) {
  std::ostringstream os;
  os << "tracking system singular at t=" << t << " (det=" << det
     << ", cond=" << cond << ")";
  return os.str();
}

std::string format_truncation(double leakage, double threshold) {
  std::ostringstream os;
  os << "truncation-shell population " << leakage << " exceeds threshold "
     << threshold;
  return os.str();
}

std::string format_propagation(double residual, double tolerance) {
  std::ostringstream os;
  os << "exponential step did not converge: residual " << residual
     << " > tolerance " << tolerance;
  return os.str();
}

std::string format_config(const std::string& file, int line,
                          const std::string& message) {
  std::ostringstream os;
  os << file << ":" << line << ": " << message;
  return os.str();
}

}  // namespace

SingularityError::SingularityError(double t_, double det_, double cond_)
    : std::runtime_error(format_singularity(t_, det_, cond_)),
      t(t_),
      det(det_),
      cond(cond_) {}

TruncationError::TruncationError(double leakage_, double threshold_)
    : std::runtime_error(format_truncation(leakage_, threshold_)),
      leakage(leakage_),
      threshold(threshold_) {}

PropagationError::PropagationError(double residual_, double tolerance_)
    : std::runtime_error(format_propagation(residual_, tolerance_)),
      residual(residual_),
      tolerance(tolerance_) {}

ConfigError::ConfigError(const std::string& file_, int line_,
                         const std::string& message)
    : std::runtime_error(format_config(file_, line_, message)),
      file(file_),
      line(line_) {}

}  // namespace qtrack
