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

#include "geomgate/schedule.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "geomgate/errors.hpp"
#include "geomgate/units.hpp"

namespace geomgate {

namespace {

constexpr double kAreaDropTol = 1e-12;

// Build one segment from a signed pulse area. The physical envelope is
// nonnegative; a negative sign is folded into a pi phase offset and into the
// running-integral factor.
PulseSegment make_segment(double signed_area, double phi_design, const EnvelopeSpec& env,
                          double duration_hint) {
  PulseSegment seg;
  const double sign = signed_area >= 0.0 ? 1.0 : -1.0;
  const double area = std::abs(signed_area);
  if (duration_hint > 0.0) {
    seg.envelope = SegmentEnvelope::from_area_fixed_duration(env, area, duration_hint);
  } else {
    seg.envelope = SegmentEnvelope::from_area_fixed_peak(env, area);
  }
  seg.phase_kind = PhaseLawKind::Constant;
  seg.phi_constant = phi_design + (sign < 0.0 ? kPi : 0.0);
  seg.drag_enabled = env.drag_enabled;
  seg.drag_coefficient = env.drag_coefficient;
  return seg;
}

}  // namespace

double PulseSegment::phase(double t) const {
  if (phase_kind == PhaseLawKind::Constant) return phi_constant;
  return phi_base - delta * t + cot_factor * envelope.integral(t);
}

double PulseSchedule::total_duration() const {
  double sum = 0.0;
  for (const auto& s : segments) sum += s.duration();
  return sum;
}

double PulseSchedule::total_half_area() const {
  double sum = 0.0;
  for (const auto& s : segments) sum += s.half_area();
  return sum;
}

double PulseSchedule::max_amplitude() const {
  double m = 0.0;
  for (const auto& s : segments) m = std::max(m, s.envelope.peak());
  return m;
}

PulseSchedule synthesize_ncna(const GateSpec& spec, const EnvelopeSpec& env,
                              const TimingPolicy& timing) {
  PulseSchedule schedule;
  schedule.kind = ScheduleKind::Geometric;
  if (spec.degenerate()) return schedule;

  const double dchi = spec.chi2 - spec.chi1;
  const double dxi = spec.xi_span();
  const double s2 = std::sin(spec.chi2);
  const double c2 = std::cos(spec.chi2);

  const double meridian_area = dchi;                    // signed
  const double latitude_area = dxi * s2 * c2;           // signed
  const double detuning_integral = -dxi * s2 * s2;      // int delta dt over the latitude

  // Resolve per-segment durations.
  double dur1 = 0.0, dur2 = 0.0, dur3 = 0.0;
  const double cF = env.shape == EnvelopeShape::CosineRampedFlatTop
                        ? 1.0
                        : SegmentEnvelope::shape_factor(env.shape, env.sigma_fraction);
  if (timing.mode == TimingMode::FixedTotalDuration) {
    if (!(timing.total_duration > 0.0)) {
      throw InfeasibleScheduleError("fixed-total timing needs a positive total duration");
    }
    const double total_area = 2.0 * std::abs(meridian_area) + std::abs(latitude_area);
    if (total_area < kAreaDropTol) {
      if (std::abs(detuning_integral) < kAreaDropTol) return schedule;
      dur2 = timing.total_duration;  // pure-detuning latitude traverse
    } else {
      dur1 = timing.total_duration * std::abs(meridian_area) / total_area;
      dur3 = dur1;
      dur2 = timing.total_duration * std::abs(latitude_area) / total_area;
    }
  } else {
    if (!(env.peak_amplitude > 0.0)) {
      throw InfeasibleScheduleError("fixed-peak timing needs a positive peak amplitude");
    }
    dur1 = dur3 = std::abs(meridian_area) / (env.peak_amplitude * cF);
    dur2 = std::abs(latitude_area) / (env.peak_amplitude * cF);
    // Keep the detuning magnitude within the available drive strength even
    // when the latitude pulse area vanishes near the equator.
    dur2 = std::max(dur2, std::abs(detuning_integral) / env.peak_amplitude);
  }

  if (std::abs(meridian_area) > kAreaDropTol) {
    schedule.segments.push_back(make_segment(meridian_area, spec.xi1 + kPi / 2.0, env, dur1));
  }

  if (std::abs(latitude_area) > kAreaDropTol || std::abs(detuning_integral) > kAreaDropTol) {
    PulseSegment seg;
    const double sign = latitude_area >= 0.0 ? 1.0 : -1.0;
    const double area = std::abs(latitude_area);
    if (env.shape == EnvelopeShape::CosineRampedFlatTop) {
      throw InfeasibleScheduleError("cosine_ramped envelopes are built via effective_schedule");
    }
    if (timing.mode == TimingMode::FixedTotalDuration || dur2 > 0.0) {
      seg.envelope = area > 0.0 ? SegmentEnvelope::from_area_fixed_duration(env, area, dur2)
                                : SegmentEnvelope::from_area_fixed_duration(
                                      {EnvelopeShape::FlatTop, 0.0}, 0.0, dur2);
    }
    if (seg.envelope.duration() <= 0.0) {
      throw InfeasibleScheduleError("latitude segment needs a positive duration");
    }
    seg.phase_kind = PhaseLawKind::RunningXi;
    seg.delta = detuning_integral / seg.envelope.duration();
    seg.cot_factor = sign * (c2 / s2);
    seg.phi_base = spec.xi1 + kPi + (sign < 0.0 ? kPi : 0.0);
    seg.drag_enabled = env.drag_enabled;
    seg.drag_coefficient = env.drag_coefficient;
    schedule.segments.push_back(seg);
  }

  if (std::abs(meridian_area) > kAreaDropTol) {
    schedule.segments.push_back(make_segment(meridian_area, spec.xi2 - kPi / 2.0, env, dur3));
  }
  return schedule;
}

PulseSegment rotation_pulse(double phi, double area, const EnvelopeSpec& env,
                            const TimingPolicy& timing) {
  double hint = 0.0;
  if (timing.mode == TimingMode::FixedTotalDuration) hint = timing.total_duration;
  return make_segment(area, phi, env, hint);
}

PulseSchedule synthesize_dynamical(StandardGate gate, const EnvelopeSpec& env,
                                   const TimingPolicy& timing) {
  PulseSchedule schedule;
  schedule.kind = ScheduleKind::Dynamical;
  schedule.label = standard_gate_name(gate);

  struct Rot {
    double phi;
    double area;
  };
  std::vector<Rot> rots;
  switch (gate) {
    case StandardGate::Identity:
      return schedule;
    case StandardGate::T:
      rots = {{-kPi / 2.0, kPi / 2.0}, {kPi, kPi / 4.0}, {kPi / 2.0, kPi / 2.0}};
      break;
    case StandardGate::S:
      rots = {{-kPi / 2.0, kPi / 2.0}, {kPi, kPi / 2.0}, {kPi / 2.0, kPi / 2.0}};
      break;
    case StandardGate::H:
      rots = {{kPi / 2.0, kPi / 2.0}, {0.0, kPi}};
      break;
  }

  TimingPolicy per_segment = timing;
  for (const auto& r : rots) {
    if (timing.mode == TimingMode::FixedTotalDuration) {
      double total_area = 0.0;
      for (const auto& q : rots) total_area += q.area;
      per_segment.total_duration = timing.total_duration * r.area / total_area;
    }
    schedule.segments.push_back(rotation_pulse(r.phi, r.area, env, per_segment));
  }
  return schedule;
}

PulseSchedule concat_schedules(const std::vector<PulseSchedule>& parts, const std::string& label) {
  PulseSchedule out;
  out.label = label;
  if (!parts.empty()) out.kind = parts.front().kind;
  for (const auto& p : parts) {
    out.segments.insert(out.segments.end(), p.segments.begin(), p.segments.end());
  }
  return out;
}

nlohmann::json schedule_to_json(const PulseSchedule& schedule, double samples_per_ns) {
  nlohmann::json doc;
  doc["label"] = schedule.label;
  doc["kind"] = schedule.kind == ScheduleKind::Geometric ? "geometric" : "dynamical";
  doc["sample_rate_per_ns"] = samples_per_ns;
  doc["total_duration_ns"] = s_to_ns(schedule.total_duration());
  doc["total_half_area_rad"] = schedule.total_half_area();
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& seg : schedule.segments) {
    nlohmann::json j;
    j["duration_ns"] = s_to_ns(seg.duration());
    j["detuning_MHz"] = rad_per_s_to_mhz(seg.delta);
    j["half_area_rad"] = seg.half_area();
    nlohmann::json amp = nlohmann::json::array();
    nlohmann::json phase = nlohmann::json::array();
    const double dt = ns_to_s(1.0) / samples_per_ns;
    const long n = std::max(1L, std::lround(seg.duration() / dt));
    for (long k = 0; k <= n; ++k) {
      const double t = std::min(seg.duration(), k * dt);
      amp.push_back(rad_per_s_to_mhz(seg.envelope.value(t)));
      phase.push_back(seg.phase(t));
    }
    j["amplitude_MHz"] = std::move(amp);
    j["phase_rad"] = std::move(phase);
    segs.push_back(std::move(j));
  }
  doc["segments"] = std::move(segs);
  return doc;
}

}  // namespace geomgate
