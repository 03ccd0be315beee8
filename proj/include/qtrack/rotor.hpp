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

namespace qtrack {

enum class RotorKind { SymmetricTop, Linear };

/// Molecular constants in the engine's nondimensional units (hbar = 1,
/// energies in units of b, dipole in units of mu). The CLI converts from
/// cm^-1 / Debye at the boundary, so internally b and mu are usually 1.
struct RotorSpec {
  RotorKind kind = RotorKind::SymmetricTop;
  double b = 1.0;   // principal rotational constant
  double c = 1.0;   // second rotational constant; ignored for linear rotors
  double mu = 1.0;  // dipole magnitude
  int jmax = 1;     // basis truncation
};

}  // namespace qtrack
