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

#include <cstdint>
#include <string>
#include <vector>

#include "qtrack/operators.hpp"
#include "qtrack/state.hpp"

namespace qtrack {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Max |A - A^dagger| element; the hermiticity check compares it to tol.
double hermiticity_defect(const OperatorMatrix& op);
bool check_hermitian(const OperatorMatrix& op, double tol = 1e-12);

/// Deterministic random unit state supported on J <= jmax-1 (interior), so
/// quadratic identities hold exactly. Box-Muller over mt19937_64 keeps the
/// stream portable across standard libraries.
WaveFunction random_interior_state(const Basis& basis, std::uint64_t seed);

/// Random unit state over the whole basis (boundary shell included).
WaveFunction random_state(const Basis& basis, std::uint64_t seed);

/// The fast invariant suite behind the `validate` CLI subcommand:
/// 3j orthogonality, position-matrix hermiticity and K conservation,
/// trace(A) = 4*mu*b and det(A) > 0 on random states, a unitarity smoke
/// test, and free-evolution energy conservation.
std::vector<CheckResult> run_validation_suite(int jmax = 6);

}  // namespace qtrack
