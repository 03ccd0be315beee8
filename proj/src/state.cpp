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

#include "qtrack/state.hpp"

#include "qtrack/errors.hpp"

namespace qtrack {

WaveFunction WaveFunction::unit_state(const Basis& basis, const BasisState& s) {
  WaveFunction psi;
  psi.amplitudes = Eigen::VectorXcd::Zero(basis.dim());
  psi.amplitudes[basis.index_of(s)] = 1.0;
  psi.basis = key_of(basis);
  return psi;
}

double boundary_population(const WaveFunction& psi, const Basis& basis) {
  if (psi.basis != key_of(basis)) {
    throw ContractViolation("boundary_population: wave function built on a different basis");
  }
  const auto& states = basis.states();
  double pop = 0.0;
  // Canonical ordering puts the J = jmax shell at the tail.
  for (int i = basis.dim() - 1; i >= 0 && states[static_cast<std::size_t>(i)].j == basis.jmax(); --i) {
    pop += std::norm(psi.amplitudes[i]);
  }
  return pop;
}

double off_block_population(const WaveFunction& psi, const Basis& basis, int k) {
  if (psi.basis != key_of(basis)) {
    throw ContractViolation("off_block_population: wave function built on a different basis");
  }
  if (basis.k_fixed()) return 0.0;
  double pop = 0.0;
  const auto& states = basis.states();
  for (int i = 0; i < basis.dim(); ++i) {
    if (states[static_cast<std::size_t>(i)].k != k) pop += std::norm(psi.amplitudes[i]);
  }
  return pop;
}

}  // namespace qtrack
