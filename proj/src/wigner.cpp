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

#include "qtrack/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qtrack/errors.hpp"

namespace qtrack {

namespace {

// ln(n!), tabulated once up to 4*jmax+2 for jmax = 64. The engine only ever
// consumes j2 = 1 symbols; the table covers the general routine comfortably.
double log_factorial(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(4 * 64 + 3, 0.0);
    for (std::size_t i = 1; i < t.size(); ++i) {
      t[i] = t[i - 1] + std::log(static_cast<double>(i));
    }
    return t;
  }();
  if (n < static_cast<int>(table.size())) return table[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace

double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3) {
  if (j1 < 0 || j2 < 0 || j3 < 0) {
    throw DomainError("wigner3j: negative angular momentum");
  }
  if (m1 + m2 + m3 != 0) return 0.0;
  if (j3 < std::abs(j1 - j2) || j3 > j1 + j2) return 0.0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3) return 0.0;

  const int kmin = std::max({0, j2 - j3 - m1, j1 - j3 + m2});
  const int kmax = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
  if (kmin > kmax) return 0.0;

  const double log_pre =
      0.5 * (log_factorial(j1 + j2 - j3) + log_factorial(j1 - j2 + j3) +
             log_factorial(-j1 + j2 + j3) - log_factorial(j1 + j2 + j3 + 1) +
             log_factorial(j1 + m1) + log_factorial(j1 - m1) +
             log_factorial(j2 + m2) + log_factorial(j2 - m2) +
             log_factorial(j3 + m3) + log_factorial(j3 - m3));

  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    const double log_term =
        log_factorial(k) + log_factorial(j1 + j2 - j3 - k) +
        log_factorial(j1 - m1 - k) + log_factorial(j2 + m2 - k) +
        log_factorial(j3 - j2 + m1 + k) + log_factorial(j3 - j1 - m2 + k);
    const double term = std::exp(log_pre - log_term);
    sum += (k % 2 == 0) ? term : -term;
  }

  const int phase = j1 - j2 - m3;
  return (((phase % 2) + 2) % 2 == 0) ? sum : -sum;
}

}  // namespace qtrack
