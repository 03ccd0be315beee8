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

namespace qtrack::units {

// CODATA 2018 / SI exact values.
inline constexpr double kPlanckJs = 6.62607015e-34;        // J s
inline constexpr double kSpeedOfLightMps = 299792458.0;    // m/s
inline constexpr double kDebyeCm = 1e-21 / kSpeedOfLightMps;  // C m

/// Photon energy of a 1 cm^-1 wavenumber, in joules.
inline constexpr double kJoulePerCm1 = kPlanckJs * kSpeedOfLightMps * 100.0;

double cm1_to_joule(double wavenumber_cm1);
double joule_to_cm1(double energy_joule);
double debye_to_si(double dipole_debye);

/// Physical size of one internal field unit (b/mu), in V/m.
double field_unit_volts_per_meter(double b_cm1, double mu_debye);

/// Physical size of one internal time unit (hbar/b), in seconds.
double time_unit_seconds(double b_cm1);

}  // namespace qtrack::units
