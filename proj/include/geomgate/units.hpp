// Copyright 2026 The geomgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>

namespace geomgate {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Internal units are angular frequency (rad/s) and seconds. Ordinary
// frequencies in MHz and durations in ns appear only at interface
// boundaries (CLI, config files, exports).
inline constexpr double mhz_to_rad_per_s(double f_mhz) { return kTwoPi * 1e6 * f_mhz; }
inline constexpr double rad_per_s_to_mhz(double w) { return w / (kTwoPi * 1e6); }
inline constexpr double ns_to_s(double t_ns) { return t_ns * 1e-9; }
inline constexpr double s_to_ns(double t_s) { return t_s * 1e9; }

// Reduce an angle to (-pi, pi].
inline double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  if (r > kPi) r -= kTwoPi;
  return r;
}

}  // namespace geomgate
