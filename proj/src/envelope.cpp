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

#include "geomgate/envelope.hpp"

#include <cmath>

#include "geomgate/errors.hpp"
#include "geomgate/units.hpp"

namespace geomgate {

namespace {

// Gaussian window constants for sigma = f*T truncated at the segment edges.
struct GaussWindow {
  double sigma;
  double floor;  // value subtracted so edges sit at zero
  double norm;   // 1 - floor
};

GaussWindow gauss_window(double duration, double sigma_fraction) {
  const double sigma = sigma_fraction * duration;
  const double half = 0.5 * duration;
  const double floor = std::exp(-half * half / (2.0 * sigma * sigma));
  return {sigma, floor, 1.0 - floor};
}

}  // namespace

EnvelopeShape parse_envelope_shape(const std::string& name) {
  if (name == "flat_top" || name == "flat-top") return EnvelopeShape::FlatTop;
  if (name == "gaussian" || name == "truncated_gaussian") return EnvelopeShape::TruncatedGaussian;
  if (name == "raised_cosine" || name == "raised-cosine") return EnvelopeShape::RaisedCosine;
  if (name == "cosine_ramped") return EnvelopeShape::CosineRampedFlatTop;
  throw ConfigError("unknown envelope shape: " + name);
}

std::string envelope_shape_name(EnvelopeShape s) {
  switch (s) {
    case EnvelopeShape::FlatTop: return "flat_top";
    case EnvelopeShape::TruncatedGaussian: return "gaussian";
    case EnvelopeShape::RaisedCosine: return "raised_cosine";
    case EnvelopeShape::CosineRampedFlatTop: return "cosine_ramped";
  }
  return "?";
}

double SegmentEnvelope::shape_factor(EnvelopeShape shape, double sigma_fraction) {
  switch (shape) {
    case EnvelopeShape::FlatTop:
      return 1.0;
    case EnvelopeShape::RaisedCosine:
      return 0.5;
    case EnvelopeShape::TruncatedGaussian: {
      // area / (peak * duration) for unit duration: analytic via erf.
      const GaussWindow w = gauss_window(1.0, sigma_fraction);
      const double gauss_int =
          w.sigma * std::sqrt(2.0 * kPi) * std::erf(0.5 / (w.sigma * std::sqrt(2.0)));
      return (gauss_int - w.floor) / w.norm;
    }
    case EnvelopeShape::CosineRampedFlatTop:
      throw InfeasibleScheduleError("cosine_ramped envelopes need explicit ramp lengths");
  }
  return 1.0;
}

SegmentEnvelope SegmentEnvelope::from_area_fixed_peak(const EnvelopeSpec& spec, double area) {
  if (area < 0.0) throw InfeasibleScheduleError("envelope area must be nonnegative");
  SegmentEnvelope env;
  env.shape_ = spec.shape;
  env.sigma_fraction_ = spec.sigma_fraction;
  env.area_ = area;
  if (area == 0.0) {
    env.peak_ = 0.0;
    env.duration_ = 0.0;
    return env;
  }
  if (!(spec.peak_amplitude > 0.0)) {
    throw InfeasibleScheduleError("fixed-peak timing needs a positive peak amplitude");
  }
  env.peak_ = spec.peak_amplitude;
  env.duration_ = area / (spec.peak_amplitude * shape_factor(spec.shape, spec.sigma_fraction));
  return env;
}

SegmentEnvelope SegmentEnvelope::from_area_fixed_duration(const EnvelopeSpec& spec, double area,
                                                          double duration) {
  if (area < 0.0) throw InfeasibleScheduleError("envelope area must be nonnegative");
  if (!(duration > 0.0)) {
    throw InfeasibleScheduleError("fixed-duration envelope needs a positive duration");
  }
  SegmentEnvelope env;
  env.shape_ = spec.shape;
  env.sigma_fraction_ = spec.sigma_fraction;
  env.area_ = area;
  env.duration_ = duration;
  env.peak_ = area / (duration * shape_factor(spec.shape, spec.sigma_fraction));
  return env;
}

SegmentEnvelope SegmentEnvelope::cosine_ramped(double area, double rise, double fall, double peak,
                                               double flat) {
  if (rise < 0.0 || fall < 0.0) throw InfeasibleScheduleError("ramp lengths must be nonnegative");
  SegmentEnvelope env;
  env.shape_ = EnvelopeShape::CosineRampedFlatTop;
  env.rise_ = rise;
  env.fall_ = fall;
  env.area_ = area;
  // Half-cosine ramps each contribute peak * ramp/2 to the area.
  const double ramp_eq = 0.5 * (rise + fall);
  if (flat >= 0.0) {
    env.duration_ = rise + flat + fall;
    env.peak_ = area / (flat + ramp_eq);
  } else {
    if (!(peak > 0.0)) {
      throw InfeasibleScheduleError("cosine_ramped: need either a flat length or a peak");
    }
    const double flat_solved = area / peak - ramp_eq;
    if (flat_solved < 0.0) {
      throw InfeasibleScheduleError(
          "cosine_ramped: ramps alone exceed the requested pulse area; shorten the ramps or "
          "lower the peak");
    }
    env.peak_ = peak;
    env.duration_ = rise + flat_solved + fall;
  }
  return env;
}

double SegmentEnvelope::value(double t) const {
  if (duration_ <= 0.0 || peak_ == 0.0) return 0.0;
  if (t <= 0.0 || t >= duration_) return 0.0;
  switch (shape_) {
    case EnvelopeShape::FlatTop:
      return peak_;
    case EnvelopeShape::RaisedCosine:
      return peak_ * 0.5 * (1.0 - std::cos(kTwoPi * t / duration_));
    case EnvelopeShape::TruncatedGaussian: {
      const GaussWindow w = gauss_window(duration_, sigma_fraction_);
      const double x = t - 0.5 * duration_;
      return peak_ * (std::exp(-x * x / (2.0 * w.sigma * w.sigma)) - w.floor) / w.norm;
    }
    case EnvelopeShape::CosineRampedFlatTop: {
      if (t < rise_) return peak_ * 0.5 * (1.0 - std::cos(kPi * t / rise_));
      const double fall_start = duration_ - fall_;
      if (t > fall_start) return peak_ * 0.5 * (1.0 + std::cos(kPi * (t - fall_start) / fall_));
      return peak_;
    }
  }
  return 0.0;
}

double SegmentEnvelope::derivative(double t) const {
  if (duration_ <= 0.0 || peak_ == 0.0) return 0.0;
  if (t <= 0.0 || t >= duration_) return 0.0;
  switch (shape_) {
    case EnvelopeShape::FlatTop:
      return 0.0;
    case EnvelopeShape::RaisedCosine:
      return peak_ * kPi / duration_ * std::sin(kTwoPi * t / duration_);
    case EnvelopeShape::TruncatedGaussian: {
      const GaussWindow w = gauss_window(duration_, sigma_fraction_);
      const double x = t - 0.5 * duration_;
      return peak_ * (-x / (w.sigma * w.sigma)) *
             std::exp(-x * x / (2.0 * w.sigma * w.sigma)) / w.norm;
    }
    case EnvelopeShape::CosineRampedFlatTop: {
      if (t < rise_) return peak_ * 0.5 * kPi / rise_ * std::sin(kPi * t / rise_);
      const double fall_start = duration_ - fall_;
      if (t > fall_start) {
        return -peak_ * 0.5 * kPi / fall_ * std::sin(kPi * (t - fall_start) / fall_);
      }
      return 0.0;
    }
  }
  return 0.0;
}

double SegmentEnvelope::integral(double t) const {
  if (duration_ <= 0.0 || peak_ == 0.0) return 0.0;
  if (t <= 0.0) return 0.0;
  if (t >= duration_) return area_;
  switch (shape_) {
    case EnvelopeShape::FlatTop:
      return peak_ * t;
    case EnvelopeShape::RaisedCosine:
      return peak_ * 0.5 * (t - duration_ / kTwoPi * std::sin(kTwoPi * t / duration_));
    case EnvelopeShape::TruncatedGaussian: {
      const GaussWindow w = gauss_window(duration_, sigma_fraction_);
      const double s2 = w.sigma * std::sqrt(2.0);
      const double a = -0.5 * duration_;
      const double x = t - 0.5 * duration_;
      const double gauss_part =
          w.sigma * std::sqrt(kPi / 2.0) * (std::erf(x / s2) - std::erf(a / s2));
      return peak_ * (gauss_part - w.floor * t) / w.norm;
    }
    case EnvelopeShape::CosineRampedFlatTop: {
      const double rise_area = peak_ * 0.5 * rise_;
      if (t < rise_) return peak_ * 0.5 * (t - rise_ / kPi * std::sin(kPi * t / rise_));
      const double fall_start = duration_ - fall_;
      if (t <= fall_start) return rise_area + peak_ * (t - rise_);
      const double u = t - fall_start;
      return rise_area + peak_ * (fall_start - rise_) +
             peak_ * 0.5 * (u + fall_ / kPi * std::sin(kPi * u / fall_));
    }
  }
  return 0.0;
}

}  // namespace geomgate
