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

#include "geomgate/linalg.hpp"

namespace geomgate {

// Path parameters of one noncyclic geometric gate. The evolution runs along
// a meridian from polar angle chi1 down (or up) to chi2 at azimuth xi1,
// along the chi2 latitude from azimuth xi1 to xi2, and back along a meridian
// to chi1. The solid angle between that path and the geodesic closing it
// fixes the geometric phase:
//
//   gamma_g = -(1/2) (xi2 - xi1) (1 - cos chi2),
//
// and gamma' = gamma_g + (xi2 - xi1)/2 parametrizes the resulting unitary.
struct GateSpec {
  double chi1 = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double gamma_prime = 0.0;
  // Derived.
  double chi2 = 0.0;
  double gamma_g = 0.0;
  int n_winding = 0;

  double xi_span() const { return xi2 - xi1; }
  double xi_plus() const { return 0.5 * (xi2 + xi1); }
  double xi_minus() const { return 0.5 * (xi2 - xi1); }
  bool degenerate() const;  // zero path: chi1 == chi2 and xi1 == xi2
};

struct Chi2Solution {
  double gamma_g;
  double chi2;
};

// Recover the admissible geometric phase branch and the latitude angle from
// (gamma', xi1, xi2): gamma_g = gamma' - (xi2-xi1)/2 reduced into (-2pi, 0]
// and then widened by multiples of 2pi until 1 + 2 gamma_g/(xi2-xi1) lies in
// [-1, 1]; chi2 = arccos of that argument. Throws UnreachablePathError when
// no branch exists, naming the admissible interval.
Chi2Solution solve_chi2(double gamma_prime, double xi1, double xi2);

// Validate and fill the derived fields. Degenerate zero paths (xi2 == xi1)
// are accepted only with gamma' == 0 (mod 2pi) and yield the identity.
GateSpec make_gate_spec(double chi1, double xi1, double xi2, double gamma_prime);

enum class StandardGate { Identity, T, S, H };

StandardGate parse_standard_gate(const std::string& name);
std::string standard_gate_name(StandardGate g);

// Catalog specs: T and S use gamma' = pi with xi spans 9pi/4 and 5pi/2 and
// chi1 = chi2 (shortest operation time); H uses chi1 = pi/2, gamma' = pi/4,
// xi1 = pi/2, xi span (2n+1)pi with n = 0.
GateSpec standard_gate(StandardGate g);

// Geometric realization of the physical rotation generators used by the
// Clifford decomposition: R_axis(theta) up to global phase, via
// chi1 = pi/2, xi2 - xi1 = 2pi, gamma' = -theta/2, xi1 = 0 (X) or pi/2 (Y).
enum class RotationAxis { X, Y };
GateSpec rotation_gate_spec(RotationAxis axis, double angle);

// Closed-form target unitary:
//   [ (c_g' + i s_g' c_chi1) e^{-i xi-}    i s_g' s_chi1 e^{-i xi+} ]
//   [ i s_g' s_chi1 e^{+i xi+}     (c_g' - i s_g' c_chi1) e^{+i xi-} ]
Mat2 target_unitary(const GateSpec& spec);

// The retraced path: swap xi1 <-> xi2 and negate gamma'. Its target unitary
// is the adjoint of the original up to global phase.
GateSpec inverse_spec(const GateSpec& spec);

}  // namespace geomgate
