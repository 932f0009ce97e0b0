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
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "geomgate/envelope.hpp"
#include "geomgate/gate_spec.hpp"

namespace geomgate {

enum class PhaseLawKind { Constant, RunningXi };

// One drive interval: nonnegative amplitude envelope, a phase law, and a
// constant detuning. The running phase law tracks the analytic envelope
// integral,
//   phi(t) = phi_base - delta * t + cot_factor * integral_0^t Omega,
// which is what cancels the dynamical phase on the latitude segment for any
// envelope shape.
struct PulseSegment {
  SegmentEnvelope envelope;
  PhaseLawKind phase_kind = PhaseLawKind::Constant;
  double phi_constant = 0.0;
  double phi_base = 0.0;    // RunningXi
  double cot_factor = 0.0;  // RunningXi; carries the traversal sign
  double delta = 0.0;       // rad/s
  bool drag_enabled = false;
  double drag_coefficient = 1.0;

  double duration() const { return envelope.duration(); }
  double phase(double t) const;
  double half_area() const { return 0.5 * envelope.area(); }
};

enum class ScheduleKind { Geometric, Dynamical };

struct PulseSchedule {
  std::vector<PulseSegment> segments;
  std::string label;
  ScheduleKind kind = ScheduleKind::Geometric;

  double total_duration() const;
  double total_half_area() const;
  double max_amplitude() const;
  bool empty() const { return segments.empty(); }
};

enum class TimingMode { FixedPeakAmplitude, FixedTotalDuration };

struct TimingPolicy {
  TimingMode mode = TimingMode::FixedPeakAmplitude;
  double total_duration = 0.0;  // FixedTotalDuration only
};

// Reverse-engineer the three-segment drive for a geometric path:
//   meridian:  phi = xi1 + pi/2,  half pulse area (chi2 - chi1)/2, delta = 0
//   latitude:  phi = xi(t) + pi,  half area (xi2 - xi1) sin(2 chi2)/4,
//              delta = -(xi2 - xi1) sin^2(chi2) / duration
//   meridian:  phi = xi2 - pi/2,  half area (chi2 - chi1)/2, delta = 0
// Negative signed areas are realized with the same nonnegative envelope and
// a pi phase offset. Zero-area segments are dropped.
PulseSchedule synthesize_ncna(const GateSpec& spec, const EnvelopeSpec& env,
                              const TimingPolicy& timing = {});

// Composite comparator gates from resonant rotations:
//   T: Ry(-pi/2), Rx(-pi/4), Ry(pi/2)   (half area 0.625 pi)
//   S: Ry(-pi/2), Rx(-pi/2), Ry(pi/2)   (half area 0.75 pi)
//   H: Ry(pi/2),  Rx(pi)                (half area 0.75 pi)
PulseSchedule synthesize_dynamical(StandardGate gate, const EnvelopeSpec& env,
                                   const TimingPolicy& timing = {});

// A single resonant (delta = 0) constant-phase pulse of the given area.
PulseSegment rotation_pulse(double phi, double area, const EnvelopeSpec& env,
                            const TimingPolicy& timing);

PulseSchedule concat_schedules(const std::vector<PulseSchedule>& parts, const std::string& label);

// Structured-text export: per-segment records with duration_ns, detuning_MHz,
// and envelope/phase samples at the given rate (samples per ns).
nlohmann::json schedule_to_json(const PulseSchedule& schedule, double samples_per_ns = 1.0);

}  // namespace geomgate
