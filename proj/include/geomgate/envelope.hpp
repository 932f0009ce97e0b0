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

#include <string>

namespace geomgate {

enum class EnvelopeShape { FlatTop, TruncatedGaussian, RaisedCosine, CosineRampedFlatTop };

EnvelopeShape parse_envelope_shape(const std::string& name);
std::string envelope_shape_name(EnvelopeShape s);

// Requested envelope family for synthesis. TruncatedGaussian uses
// sigma = sigma_fraction * duration, truncated at the segment edges
// (+- 1/(2 sigma_fraction) sigmas), shifted to start and end at zero and
// rescaled so the area is met exactly. DRAG adds a quadrature component
// proportional to the envelope derivative divided by the anharmonicity.
struct EnvelopeSpec {
  EnvelopeShape shape = EnvelopeShape::TruncatedGaussian;
  double peak_amplitude = 0.0;    // rad/s
  double sigma_fraction = 0.25;   // sigma / duration
  bool drag_enabled = false;
  double drag_coefficient = 1.0;  // scales derivative / anharmonicity

  double truncation_sigmas() const { return 0.5 / sigma_fraction; }
};

// A concrete nonnegative amplitude profile on [0, duration] with closed-form
// value, derivative, running integral, and total area. Pulse areas are exact
// (analytic), which is what keeps the reverse-engineered phase laws and the
// detuning cancellation condition intact for every shape.
class SegmentEnvelope {
 public:
  SegmentEnvelope() = default;

  static double shape_factor(EnvelopeShape shape, double sigma_fraction);

  // Solve the duration so that the given peak amplitude meets the area.
  static SegmentEnvelope from_area_fixed_peak(const EnvelopeSpec& spec, double area);
  // Solve the peak so that the given duration meets the area.
  static SegmentEnvelope from_area_fixed_duration(const EnvelopeSpec& spec, double area,
                                                  double duration);
  // Flat top with half-cosine ramps of explicit lengths; peak solved from the
  // area unless a positive peak is given (then the flat length is solved).
  static SegmentEnvelope cosine_ramped(double area, double rise, double fall, double peak = 0.0,
                                       double flat = -1.0);

  double value(double t) const;
  double derivative(double t) const;
  double integral(double t) const;  // running integral from 0 to t

  double area() const { return area_; }
  double duration() const { return duration_; }
  double peak() const { return peak_; }
  EnvelopeShape shape() const { return shape_; }
  double sigma_fraction() const { return sigma_fraction_; }
  double rise() const { return rise_; }
  double fall() const { return fall_; }

 private:
  EnvelopeShape shape_ = EnvelopeShape::FlatTop;
  double peak_ = 0.0;
  double duration_ = 0.0;
  double area_ = 0.0;
  double sigma_fraction_ = 0.25;
  double rise_ = 0.0;  // CosineRampedFlatTop only
  double fall_ = 0.0;
};

}  // namespace geomgate
