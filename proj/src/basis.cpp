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

#include "qtrack/basis.hpp"

#include <cmath>
#include <sstream>

#include "qtrack/errors.hpp"

namespace qtrack {

Basis Basis::enumerate(int jmax, std::optional<int> k_fixed) {
  if (jmax < 0) throw DomainError("enumerate_basis: jmax must be >= 0");
  if (k_fixed && std::abs(*k_fixed) > jmax) {
    throw DomainError("enumerate_basis: |k_fixed| exceeds jmax");
  }

  Basis b;
  b.jmax_ = jmax;
  b.k_fixed_ = k_fixed;

  std::size_t dim = 0;
  if (k_fixed) {
    const int j0 = std::abs(*k_fixed);
    dim = static_cast<std::size_t>((jmax + 1) * (jmax + 1) - j0 * j0);
  } else {
    for (int j = 0; j <= jmax; ++j) dim += static_cast<std::size_t>((2 * j + 1) * (2 * j + 1));
  }
  b.states_.reserve(dim);

  for (int j = 0; j <= jmax; ++j) {
    if (k_fixed) {
      if (std::abs(*k_fixed) > j) continue;
      for (int m = -j; m <= j; ++m) b.states_.push_back({j, *k_fixed, m});
    } else {
      for (int k = -j; k <= j; ++k) {
        for (int m = -j; m <= j; ++m) b.states_.push_back({j, k, m});
      }
    }
  }
  return b;
}

bool Basis::contains(const BasisState& s) const {
  if (s.j < 0 || s.j > jmax_) return false;
  if (std::abs(s.k) > s.j || std::abs(s.m) > s.j) return false;
  if (k_fixed_ && s.k != *k_fixed_) return false;
  return true;
}

int Basis::index_of(const BasisState& s) const {
  if (!contains(s)) {
    std::ostringstream os;
    os << "state (" << s.j << "," << s.k << "," << s.m << ") not in basis";
    throw DomainError(os.str());
  }
  if (k_fixed_) {
    // States with J < |k| do not exist; offset of shell J is J^2 - k^2.
    const int j0 = std::abs(*k_fixed_);
    return s.j * s.j - j0 * j0 + (s.m + s.j);
  }
  // Full basis: shells of size (2J+1)^2; sum_{j<J}(2j+1)^2 = J(2J-1)(2J+1)/3.
  const int shell_offset = s.j * (2 * s.j - 1) * (2 * s.j + 1) / 3;
  return shell_offset + (s.k + s.j) * (2 * s.j + 1) + (s.m + s.j);
}

}  // namespace qtrack
