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

/// Wigner 3j symbol for integer angular momenta, evaluated by the Racah
/// single-sum formula with log-factorials. Returns exactly 0 when the
/// m-sum rule or the triangle condition fails. Half-integer momenta are
/// not supported. Throws DomainError for negative j.
double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3);

}  // namespace qtrack
