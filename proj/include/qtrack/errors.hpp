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

#include <stdexcept>
#include <string>

namespace qtrack {

/// Invalid argument values (quantum numbers out of range, bad track data, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Internal contract breakage, e.g. a wave function paired with the wrong basis.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// The 3x3 tracking system became non-invertible (or numerically untrustworthy).
class SingularityError : public std::runtime_error {
 public:
  SingularityError(double t, double det, double cond);
  double t;
  double det;
  double cond;
};

/// Population at the basis truncation shell exceeded the configured threshold.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(double leakage, double threshold);
  double leakage;
  double threshold;
};

/// The matrix-exponential step failed to reach its accuracy contract.
class PropagationError : public std::runtime_error {
 public:
  PropagationError(double residual, double tolerance);
  double residual;
  double tolerance;
};

/// Config-file problem, carrying a file/line/key diagnostic.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& file, int line, const std::string& message);
  std::string file;
  int line;
};

}  // namespace qtrack
