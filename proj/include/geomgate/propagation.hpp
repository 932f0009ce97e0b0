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

#include <functional>
#include <limits>
#include <vector>

#include "geomgate/linalg.hpp"
#include "geomgate/schedule.hpp"

namespace geomgate {

inline constexpr double kInfTime = std::numeric_limits<double>::infinity();

// Rotating-frame qubit (or transmon truncated to three levels).
struct QubitModel {
  int level_count = 2;
  double anharmonicity = 0.0;  // rad/s, three-level only
  double t1 = kInfTime;        // relaxation time, s
  double tphi = kInfTime;      // pure dephasing time, s

  void validate() const;
  bool lossless() const { return t1 == kInfTime && tphi == kInfTime; }
};

// Coherent control errors: (1+epsilon) scales the drive amplitude and
// delta * omega_max shifts the detuning, omega_max being the schedule's
// maximum drive amplitude. epsilon = delta = 0 reproduces the ideal
// Hamiltonian exactly (same code path).
struct ErrorModel {
  double epsilon = 0.0;
  double delta = 0.0;
  double omega_max = 0.0;  // rad/s; 0 means "take it from the schedule"

  double resolved_omega_max(const PulseSchedule& s) const {
    return omega_max > 0.0 ? omega_max : s.max_amplitude();
  }
};

struct BlochSample {
  double t = 0.0;
  double x = 0.0, y = 0.0, z = 0.0;
  double leakage = 0.0;
};

struct UnitaryResult {
  MatX u;             // 2x2 or 3x3 propagator
  double leakage = 0.0;  // mean qubit-subspace loss over |0>, |1> inputs
};

struct DensityResult {
  MatX rho;
  double leakage = 0.0;
};

inline constexpr double kDefaultStep = 0.1e-9;  // s

// Time-ordered product of per-step propagators with the Hamiltonian sampled
// at midpoints. Two-level steps use the closed-form SU(2) exponential;
// three-level steps diagonalize the Hermitian step Hamiltonian.
UnitaryResult propagate_unitary(const PulseSchedule& schedule, const ErrorModel& err,
                                double step = kDefaultStep, const QubitModel& qubit = {});

// Three-level propagation: drive couples 0-1 and 1-2 (the latter sqrt(2)
// stronger), the second excited level carries the anharmonicity detuning,
// and DRAG (when the envelope requests it) adds the derivative quadrature.
UnitaryResult propagate_qutrit(const PulseSchedule& schedule, const ErrorModel& err,
                               const QubitModel& qubit, double step = kDefaultStep);

// Lindblad propagation of a density matrix: relaxation via the lowering
// channel at rate 1/T1 and pure dephasing via level projectors at rate
// 1/Tphi. Dense superoperator exponentials per step.
DensityResult propagate_density(const PulseSchedule& schedule, const ErrorModel& err,
                                const QubitModel& qubit, const MatX& rho0,
                                double step = kDefaultStep);

// The schedule's quantum channel as a d^2 x d^2 superoperator on
// column-stacked density matrices. Lossless models reduce to conj(U) (x) U.
MatX schedule_superoperator(const PulseSchedule& schedule, const ErrorModel& err,
                            const QubitModel& qubit, double step = kDefaultStep);

// Pure-state trajectory on the Bloch sphere (two-level, ideal errors by
// default), sampled once per step.
std::vector<BlochSample> bloch_trajectory(const PulseSchedule& schedule, const Vec2& psi0,
                                          const ErrorModel& err = {}, double step = kDefaultStep);

// The two-level step Hamiltonian at one sample time, with errors applied:
//   (1/2) [ -(Delta + delta*Omega_m)   (1+eps) Omega e^{-i phi} ]
//         [  (1+eps) Omega e^{+i phi}   (Delta + delta*Omega_m) ]
Mat2 step_hamiltonian(const PulseSegment& seg, double t_local, const ErrorModel& err,
                      double omega_max);

// Visit every integration step (segment, local midpoint time, dt) in order.
void for_each_step(const PulseSchedule& schedule, double step,
                   const std::function<void(const PulseSegment&, double, double)>& visit);

struct PhaseAudit {
  double dynamical = 0.0;  // -int <psi|H|psi> dt over the latitude segment
  double geometric = 0.0;  // -(1/2) int xi_dot (1 - cos chi) dt over the path
};

// Propagate the path-following eigenstate of the spec and integrate both
// phases numerically along the actual evolved trajectory.
PhaseAudit phase_audit(const PulseSchedule& schedule, const GateSpec& spec,
                       double step = kDefaultStep / 10.0);

}  // namespace geomgate
