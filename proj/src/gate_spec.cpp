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

#include "geomgate/gate_spec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geomgate/errors.hpp"
#include "geomgate/units.hpp"

namespace geomgate {

namespace {
constexpr double kDegenerateXiTol = 1e-12;
constexpr double kBranchTol = 1e-12;
}  // namespace

bool GateSpec::degenerate() const {
  return std::abs(xi2 - xi1) < kDegenerateXiTol && std::abs(chi2 - chi1) < kDegenerateXiTol;
}

Chi2Solution solve_chi2(double gamma_prime, double xi1, double xi2) {
  const double span = xi2 - xi1;
  if (std::abs(span) < kDegenerateXiTol) {
    throw UnreachablePathError("solve_chi2: xi2 == xi1 leaves no latitude path");
  }

  // Reduce gamma' - (xi2-xi1)/2 into (-2pi, 0], then widen by +-2pi.
  double base = std::fmod(gamma_prime - 0.5 * span, kTwoPi);
  if (base > 0.0) base -= kTwoPi;

  const int k_max = static_cast<int>(std::ceil(std::abs(span) / kTwoPi)) + 2;
  for (int step = 0; step <= 2 * k_max; ++step) {
    const int k = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    const double g = base + kTwoPi * k;
    const double arg = 1.0 + 2.0 * g / span;
    if (std::abs(arg) <= 1.0 + kBranchTol) {
      return {g, std::acos(std::clamp(arg, -1.0, 1.0))};
    }
  }

  std::ostringstream msg;
  const double lo = std::min(0.0, -span);
  const double hi = std::max(0.0, -span);
  msg << "solve_chi2: no admissible geometric-phase branch; need gamma_g in [" << lo << ", "
      << hi << "] rad but gamma' - (xi2-xi1)/2 = " << base << " (mod 2pi) with xi span " << span;
  throw UnreachablePathError(msg.str());
}

GateSpec make_gate_spec(double chi1, double xi1, double xi2, double gamma_prime) {
  GateSpec spec;
  spec.chi1 = chi1;
  spec.xi1 = xi1;
  spec.xi2 = xi2;
  spec.gamma_prime = gamma_prime;

  if (std::abs(xi2 - xi1) < kDegenerateXiTol) {
    if (std::abs(wrap_angle(gamma_prime)) > 1e-9) {
      throw UnreachablePathError(
          "make_gate_spec: a zero path (xi2 == xi1) cannot carry a nonzero gamma'");
    }
    spec.chi2 = chi1;
    spec.gamma_g = 0.0;
    return spec;
  }

  const Chi2Solution sol = solve_chi2(gamma_prime, xi1, xi2);
  spec.gamma_g = sol.gamma_g;
  spec.chi2 = sol.chi2;

  if (!(chi1 > 0.0 && chi1 < kPi)) {
    throw UnreachablePathError("make_gate_spec: chi1 must lie in (0, pi)");
  }
  return spec;
}

StandardGate parse_standard_gate(const std::string& name) {
  if (name == "T" || name == "t") return StandardGate::T;
  if (name == "S" || name == "s") return StandardGate::S;
  if (name == "H" || name == "h") return StandardGate::H;
  if (name == "I" || name == "identity") return StandardGate::Identity;
  throw ConfigError("unknown gate name: " + name);
}

std::string standard_gate_name(StandardGate g) {
  switch (g) {
    case StandardGate::Identity: return "identity";
    case StandardGate::T: return "T";
    case StandardGate::S: return "S";
    case StandardGate::H: return "H";
  }
  return "?";
}

GateSpec standard_gate(StandardGate g) {
  switch (g) {
    case StandardGate::Identity: {
      GateSpec spec;
      spec.chi1 = spec.chi2 = kPi / 2.0;
      return spec;
    }
    case StandardGate::T: {
      const Chi2Solution sol = solve_chi2(kPi, 0.0, 9.0 * kPi / 4.0);
      GateSpec spec = make_gate_spec(sol.chi2, 0.0, 9.0 * kPi / 4.0, kPi);
      return spec;
    }
    case StandardGate::S: {
      const Chi2Solution sol = solve_chi2(kPi, 0.0, 5.0 * kPi / 2.0);
      GateSpec spec = make_gate_spec(sol.chi2, 0.0, 5.0 * kPi / 2.0, kPi);
      return spec;
    }
    case StandardGate::H: {
      GateSpec spec = make_gate_spec(kPi / 2.0, kPi / 2.0, 3.0 * kPi / 2.0, kPi / 4.0);
      spec.n_winding = 0;
      return spec;
    }
  }
  throw ConfigError("standard_gate: unknown gate");
}

GateSpec rotation_gate_spec(RotationAxis axis, double angle) {
  const double xi1 = (axis == RotationAxis::X) ? 0.0 : kPi / 2.0;
  return make_gate_spec(kPi / 2.0, xi1, xi1 + kTwoPi, -0.5 * angle);
}

Mat2 target_unitary(const GateSpec& spec) {
  const double cg = std::cos(spec.gamma_prime);
  const double sg = std::sin(spec.gamma_prime);
  const double c1 = std::cos(spec.chi1);
  const double s1 = std::sin(spec.chi1);
  const Complex diag(cg, sg * c1);
  const Complex off = kI * sg * s1;
  const Complex em = std::exp(-kI * spec.xi_minus());
  const Complex ep = std::exp(-kI * spec.xi_plus());
  Mat2 u;
  u << diag * em, off * ep, off * std::conj(ep), std::conj(diag) * std::conj(em);
  return u;
}

GateSpec inverse_spec(const GateSpec& spec) {
  if (spec.degenerate()) return spec;
  return make_gate_spec(spec.chi1, spec.xi2, spec.xi1, -spec.gamma_prime);
}

}  // namespace geomgate
