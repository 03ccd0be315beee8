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

#include <compare>
#include <optional>
#include <vector>

namespace qtrack {

/// One symmetric-top eigenstate label |J K M>. K is the body-fixed z
/// projection, M the space-fixed Z projection; both range over -J..J.
struct BasisState {
  int j = 0;
  int k = 0;
  int m = 0;
  auto operator<=>(const BasisState&) const = default;
};

/// Truncated |JKM> basis with canonical (J asc, K asc, M asc) ordering. The
/// state <-> index maps are closed-form, so serialized indices are portable.
/// An optional fixed-K restriction selects the invariant subspace reached by
/// K-conserving dynamics.
class Basis {
 public:
  Basis() = default;  // empty basis; populate via enumerate()
  static Basis enumerate(int jmax, std::optional<int> k_fixed = std::nullopt);

  int jmax() const { return jmax_; }
  std::optional<int> k_fixed() const { return k_fixed_; }
  int dim() const { return static_cast<int>(states_.size()); }
  const std::vector<BasisState>& states() const { return states_; }
  const BasisState& state(int index) const { return states_[static_cast<std::size_t>(index)]; }

  bool contains(const BasisState& s) const;
  /// Contiguous index of a contained state; throws DomainError otherwise.
  int index_of(const BasisState& s) const;

  bool operator==(const Basis& other) const {
    return jmax_ == other.jmax_ && k_fixed_ == other.k_fixed_;
  }

 private:
  int jmax_ = 0;
  std::optional<int> k_fixed_;
  std::vector<BasisState> states_;
};

/// Lightweight identifier used by wave functions to assert basis agreement.
struct BasisKey {
  int jmax = 0;
  std::optional<int> k_fixed;
  bool operator==(const BasisKey&) const = default;
};

inline BasisKey key_of(const Basis& b) { return BasisKey{b.jmax(), b.k_fixed()}; }

}  // namespace qtrack
