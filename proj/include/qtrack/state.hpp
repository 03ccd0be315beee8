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

#include <Eigen/Dense>
#include <complex>

#include "qtrack/basis.hpp"

namespace qtrack {

/// Complex amplitude vector over an enumerated |JKM> basis, unit norm.
struct WaveFunction {
  Eigen::VectorXcd amplitudes;
  BasisKey basis;

  double norm() const { return amplitudes.norm(); }

  static WaveFunction unit_state(const Basis& basis, const BasisState& s);
};

/// Probability weight on the truncation shell J = jmax.
double boundary_population(const WaveFunction& psi, const Basis& basis);

/// Probability weight outside the given K block (full-basis runs only).
double off_block_population(const WaveFunction& psi, const Basis& basis, int k);

}  // namespace qtrack
