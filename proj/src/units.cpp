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

#include "qtrack/units.hpp"

#include <numbers>

namespace qtrack::units {

double cm1_to_joule(double wavenumber_cm1) { return wavenumber_cm1 * kJoulePerCm1; }

double joule_to_cm1(double energy_joule) { return energy_joule / kJoulePerCm1; }

double debye_to_si(double dipole_debye) { return dipole_debye * kDebyeCm; }

double field_unit_volts_per_meter(double b_cm1, double mu_debye) {
  return cm1_to_joule(b_cm1) / debye_to_si(mu_debye);
}

double time_unit_seconds(double b_cm1) {
  const double hbar = kPlanckJs / (2.0 * std::numbers::pi);
  return hbar / cm1_to_joule(b_cm1);
}

}  // namespace qtrack::units
