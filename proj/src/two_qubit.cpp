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

#include "geomgate/two_qubit.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "geomgate/errors.hpp"
#include "geomgate/units.hpp"

namespace geomgate {

namespace {

// Subspace basis order used throughout: e0 = |10> (index 2), e1 = |01>
// (index 1). This orientation puts the modulation frequency above
// omega01 - omega10, i.e. omega_p = omega01 - omega10 + g_eff cot(chi2).
constexpr int kE0 = 2;
constexpr int kE1 = 1;

Mat4 embed_subspace_matrix(const Mat2& u) {
  Mat4 out = Mat4::Identity();
  out(kE0, kE0) = u(0, 0);
  out(kE0, kE1) = u(0, 1);
  out(kE1, kE0) = u(1, 0);
  out(kE1, kE1) = u(1, 1);
  return out;
}

std::vector<std::pair<Mat4, double>> two_qubit_collapse_ops(const TwoQubitNoise& noise) {
  std::vector<std::pair<Mat4, double>> ops;
  Mat2 lower = Mat2::Zero();
  lower(0, 1) = 1.0;
  const Mat2 eye = Mat2::Identity();
  Mat2 p0 = Mat2::Zero(), p1 = Mat2::Zero();
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;

  auto add = [&](const Mat2& op, bool on_a, double rate) {
    if (rate <= 0.0) return;
    const MatX big = on_a ? kron(op, eye) : kron(eye, op);
    ops.emplace_back(Mat4(big), rate);
  };
  if (noise.t1_a != kInfTime) add(lower, true, 1.0 / noise.t1_a);
  if (noise.t1_b != kInfTime) add(lower, false, 1.0 / noise.t1_b);
  if (noise.tphi_a != kInfTime) {
    add(p0, true, 1.0 / noise.tphi_a);
    add(p1, true, 1.0 / noise.tphi_a);
  }
  if (noise.tphi_b != kInfTime) {
    add(p0, false, 1.0 / noise.tphi_b);
    add(p1, false, 1.0 / noise.tphi_b);
  }
  return ops;
}

}  // namespace

GateSpec bell_gate_spec(double chi, double xi_span) {
  if (!(chi > 0.0 && chi < kPi)) throw UnreachablePathError("bell_gate_spec: chi out of (0, pi)");
  const double xi_minus = 0.5 * xi_span;
  const double gamma_g = -0.5 * xi_span * (1.0 - std::cos(chi));
  const double gamma_prime = gamma_g + xi_minus;

  // Azimuth origin from the target phase: with column amplitudes
  // A = (c + i s c_chi) e^{-i xi-} on e0 and B = i s s_chi e^{+i xi+} on e1,
  // the Bell target needs arg(B) - arg(A) = -pi/2.
  const double cg = std::cos(gamma_prime);
  const double sg = std::sin(gamma_prime);
  const double theta = std::atan2(sg * std::cos(chi), cg);
  const double sign_b = sg >= 0.0 ? 0.0 : kPi;
  double xi_plus = wrap_angle(theta - kPi - xi_minus - sign_b);

  GateSpec spec = make_gate_spec(chi, xi_plus - xi_minus, xi_plus + xi_minus, gamma_prime);
  if (std::abs(spec.chi2 - chi) > 1e-9) {
    throw NumericalError("bell_gate_spec: latitude angle did not round-trip");
  }
  return spec;
}

TwoQubitSchedule effective_schedule(const GateSpec& spec, const ParametricDrive& drive,
                                    const RampSpec& ramp) {
  if (spec.degenerate()) {
    TwoQubitSchedule out;
    out.spec = spec;
    out.schedule.kind = ScheduleKind::Geometric;
    out.schedule.label = "bell";
    return out;
  }
  if (std::abs(spec.chi2 - spec.chi1) > 1e-12) {
    throw InfeasibleScheduleError(
        "effective_schedule: the subspace drive realizes latitude-only paths (chi1 == chi2)");
  }
  if (!(drive.g_eff > 0.0) && ramp.flat < 0.0) {
    throw InfeasibleScheduleError("effective_schedule: need g_eff > 0 or an explicit flat length");
  }

  const double dxi = spec.xi_span();
  const double s2 = std::sin(spec.chi2);
  const double c2 = std::cos(spec.chi2);
  const double area = std::abs(dxi * s2 * c2);
  const double sign = (dxi * s2 * c2) >= 0.0 ? 1.0 : -1.0;

  PulseSegment seg;
  if (ramp.flat >= 0.0) {
    seg.envelope = SegmentEnvelope::cosine_ramped(area, ramp.rise, ramp.fall, 0.0, ramp.flat);
  } else {
    seg.envelope = SegmentEnvelope::cosine_ramped(area, ramp.rise, ramp.fall, drive.g_eff);
  }
  seg.phase_kind = PhaseLawKind::RunningXi;
  seg.delta = -dxi * s2 * s2 / seg.envelope.duration();
  seg.cot_factor = sign * (c2 / s2);
  seg.phi_base = spec.xi1 + kPi + (sign < 0.0 ? kPi : 0.0);

  TwoQubitSchedule out;
  out.spec = spec;
  out.schedule.kind = ScheduleKind::Geometric;
  out.schedule.label = "bell";
  out.schedule.segments.push_back(seg);
  out.schedule_detuning = seg.delta;
  const double g_peak = seg.envelope.peak();
  out.modulation_offset = g_peak * (c2 / s2);
  if (drive.omega01 != 0.0 || drive.omega10 != 0.0) {
    out.omega_p = drive.omega01 - drive.omega10 + out.modulation_offset;
  }
  return out;
}

Mat4 embed_subspace(const Mat2& u) { return embed_subspace_matrix(u); }

Mat4 evolve_two_qubit(const PulseSchedule& schedule, int initial_basis_index,
                      const TwoQubitNoise& noise, double step) {
  if (initial_basis_index < 0 || initial_basis_index > 3) {
    throw NumericalError("evolve_two_qubit: initial state must be a computational basis index");
  }
  Vec4 psi0 = Vec4::Zero();
  psi0(initial_basis_index) = 1.0;

  if (!noise.any()) {
    const ErrorModel ideal{};
    const UnitaryResult sub = propagate_unitary(schedule, ideal);
    const Mat4 u4 = embed_subspace_matrix(Mat2(sub.u));
    const Vec4 psi = u4 * psi0;
    return psi * psi.adjoint();
  }

  // Full four-level Lindblad integration with the drive embedded in the
  // exchange subspace.
  Mat4 rho = psi0 * psi0.adjoint();
  const auto collapse = two_qubit_collapse_ops(noise);
  MatX diss = MatX::Zero(16, 16);
  const Mat4 eye4 = Mat4::Identity();
  for (const auto& [op, rate] : collapse) {
    const MatX ldl = op.adjoint() * op;
    diss += rate * (kron(op.conjugate(), op) - 0.5 * kron(eye4, ldl) -
                    0.5 * kron(ldl.transpose(), eye4));
  }

  VecX rho_vec(16);
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) rho_vec(c * 4 + r) = rho(r, c);
  }

  const ErrorModel ideal{};
  for_each_step(schedule, step, [&](const PulseSegment& seg, double t_mid, double dt) {
    const Mat2 h2 = step_hamiltonian(seg, t_mid, ideal, 0.0);
    Mat4 h4 = Mat4::Zero();
    h4(kE0, kE0) = h2(0, 0);
    h4(kE0, kE1) = h2(0, 1);
    h4(kE1, kE0) = h2(1, 0);
    h4(kE1, kE1) = h2(1, 1);
    const MatX liouville =
        (-kI * (kron(eye4, MatX(h4)) - kron(MatX(h4.transpose()), eye4)) + diss) * dt;
    rho_vec = liouville.exp() * rho_vec;
  });

  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) rho(r, c) = rho_vec(c * 4 + r);
  }
  return rho;
}

Vec4 bell_target(int initial_basis_index) {
  Vec4 psi = Vec4::Zero();
  const double inv = 1.0 / std::sqrt(2.0);
  if (initial_basis_index == 2) {
    psi(2) = inv;
    psi(1) = Complex(0.0, -inv);
  } else if (initial_basis_index == 1) {
    psi(2) = inv;
    psi(1) = Complex(0.0, inv);
  } else {
    throw NumericalError("bell_target: initial state must be |01> or |10>");
  }
  return psi;
}

}  // namespace geomgate
