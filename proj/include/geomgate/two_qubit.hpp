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

#include <optional>

#include "geomgate/propagation.hpp"
#include "geomgate/schedule.hpp"
#include "geomgate/units.hpp"

namespace geomgate {

// Parametric flux modulation of the coupler,
// phi(t) = phi_dc + eps_p cos(omega_p t + phi_p), which produces an
// effective exchange coupling g_eff in the {|01>, |10>} subspace. The
// effective coupling and level splittings are inputs here; the modulation
// frequency follows from the synthesized detuning.
struct ParametricDrive {
  double g_eff = 0.0;    // rad/s
  double omega01 = 0.0;  // rad/s, |01> level frequency (optional, reporting)
  double omega10 = 0.0;  // rad/s
  double phi_dc = 0.0;
  double eps_p = 0.0;
  double phi_p = 0.0;
  double eta = 0.0;      // effective phase slope; 0 in the modulation frame
  double varphi = 0.0;   // effective phase offset (folded into xi1)
};

struct RampSpec {
  double rise = 10e-9;
  double flat = -1.0;  // < 0: solve analytically from the pulse area
  double fall = 10e-9;
};

struct TwoQubitSchedule {
  PulseSchedule schedule;     // subspace drive, basis (|10>, |01>)
  GateSpec spec;
  double modulation_offset = 0.0;  // omega_p - (omega01 - omega10) = g_eff cot(chi2)
  double schedule_detuning = 0.0;  // exact synthesized detuning (rad/s)
  double omega_p = 0.0;            // modulation frequency when omega01/10 given
};

// Path parameters for the partial-exchange Bell operation: chi1 = chi2 = chi,
// xi span fixed, gamma' forced by the solid-angle identity, and the azimuth
// origin solved so |10> maps to (|10> - i|01>)/sqrt(2) with the exact target
// phase (the same origin sends |01> to (|10> + i|01>)/sqrt(2)).
GateSpec bell_gate_spec(double chi = 0.789, double xi_span = 3.0 * kPi / 2.0);

// Map the subspace synthesis onto the parametric drive: flat-top-with-ramps
// envelope at peak g_eff, uniform detuning over the full waveform meeting
// the cancellation integral. When ramp.flat < 0 the flat length is solved
// from the area; otherwise the peak is solved from the given durations.
TwoQubitSchedule effective_schedule(const GateSpec& spec, const ParametricDrive& drive,
                                    const RampSpec& ramp);

struct TwoQubitNoise {
  double t1_a = kInfTime, tphi_a = kInfTime;
  double t1_b = kInfTime, tphi_b = kInfTime;
  bool any() const {
    return t1_a != kInfTime || tphi_a != kInfTime || t1_b != kInfTime || tphi_b != kInfTime;
  }
};

// Embed a subspace unitary into the 4-dim space, acting on (|10>, |01>) and
// leaving |00>, |11> fixed.
Mat4 embed_subspace(const Mat2& u);

// Propagate a computational initial state through the effective-model
// schedule; returns the final 4x4 density matrix. With noise the full
// four-level Lindblad equation is integrated.
Mat4 evolve_two_qubit(const PulseSchedule& schedule, int initial_basis_index,
                      const TwoQubitNoise& noise = {}, double step = kDefaultStep);

// Target Bell states: (|10> -+ i|01>)/sqrt(2) for initial |10> (index 2) and
// |01> (index 1) respectively.
Vec4 bell_target(int initial_basis_index);

}  // namespace geomgate
