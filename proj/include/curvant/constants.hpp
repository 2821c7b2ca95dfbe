// SPDX-License-Identifier: Apache-2.0
//
// curvant -- conformal multi-dipole antenna design toolkit

#pragma once

namespace curvant {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfLight = 299792458.0;       // m/s
inline constexpr double kMu0 = 4.0e-7 * kPi;               // H/m
inline constexpr double kEps0 = 1.0 / (kMu0 * kSpeedOfLight * kSpeedOfLight); // F/m
inline constexpr double kEta0 = kMu0 * kSpeedOfLight;      // free-space impedance, Ohm

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

} // namespace curvant
