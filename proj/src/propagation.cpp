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

#include "geomgate/propagation.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "geomgate/errors.hpp"
#include "geomgate/units.hpp"

namespace geomgate {

namespace {

struct StepDrive {
  double omega;  // physical amplitude including the epsilon error, >= 0
  double domega;
  double phi;
  double detuning;  // includes the delta error
};

StepDrive sample_drive(const PulseSegment& seg, double t_local, const ErrorModel& err,
                       double omega_max) {
  StepDrive d;
  d.omega = (1.0 + err.epsilon) * seg.envelope.value(t_local);
  d.domega = (1.0 + err.epsilon) * seg.envelope.derivative(t_local);
  d.phi = seg.phase(t_local);
  d.detuning = seg.delta + err.delta * omega_max;
  if (!std::isfinite(d.omega) || !std::isfinite(d.phi) || !std::isfinite(d.detuning)) {
    throw NumericalError("propagation: non-finite drive sample");
  }
  return d;
}

// exp(-i H dt) for H = (1/2)(bx sx + by sy + bz sz).
Mat2 su2_step(double bx, double by, double bz, double dt) {
  const double norm = std::sqrt(bx * bx + by * by + bz * bz);
  const double half = 0.5 * norm * dt;
  const double c = std::cos(half);
  const double s = norm > 0.0 ? std::sin(half) / norm : 0.5 * dt;
  Mat2 u;
  const Complex nz(0.0, -s * bz);
  const Complex nxy(-s * by, -s * bx);
  u << c + nz, nxy, -std::conj(nxy), c - nz;
  return u;
}

Mat2 two_level_hamiltonian(const StepDrive& d) {
  Mat2 h;
  const Complex drive = 0.5 * d.omega * std::exp(-kI * d.phi);
  h << -0.5 * d.detuning, drive, std::conj(drive), 0.5 * d.detuning;
  return h;
}

// Three-level Hamiltonian in the drive frame. The 0-1 block matches the
// two-level form; level 2 sits at 3*Delta/2 + alpha relative to the same
// frame shift, and the 1-2 coupling is sqrt(2) times the 0-1 one. DRAG adds
// the derivative quadrature to the complex envelope.
Mat3 three_level_hamiltonian(const StepDrive& d, const QubitModel& qubit, bool drag,
                             double drag_coefficient) {
  Complex lambda(d.omega, 0.0);
  if (drag && qubit.anharmonicity != 0.0) {
    lambda += kI * drag_coefficient * d.domega / qubit.anharmonicity;
  }
  const Complex drive01 = 0.5 * lambda * std::exp(-kI * d.phi);
  const Complex drive12 = std::sqrt(2.0) * drive01;
  Mat3 h = Mat3::Zero();
  h(0, 0) = -0.5 * d.detuning;
  h(1, 1) = 0.5 * d.detuning;
  h(2, 2) = 1.5 * d.detuning + qubit.anharmonicity;
  h(0, 1) = drive01;
  h(1, 0) = std::conj(drive01);
  h(1, 2) = drive12;
  h(2, 1) = std::conj(drive12);
  return h;
}

Mat3 herm_exp_step(const Mat3& h, double dt) {
  Eigen::SelfAdjointEigenSolver<Mat3> es(h);
  const Eigen::Vector3d ev = es.eigenvalues();
  Vec3 phases;
  for (int i = 0; i < 3; ++i) phases(i) = std::exp(Complex(0.0, -ev(i) * dt));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

template <typename Visitor>
void walk_steps(const PulseSchedule& schedule, double step, Visitor&& visit) {
  if (!(step > 0.0)) throw NumericalError("propagation: step must be positive");
  double t_global = 0.0;
  for (const auto& seg : schedule.segments) {
    const double dur = seg.duration();
    if (dur <= 0.0) continue;
    const long n = std::max(1L, static_cast<long>(std::ceil(dur / step - 1e-12)));
    const double dt = dur / static_cast<double>(n);
    for (long k = 0; k < n; ++k) {
      const double t_mid = (static_cast<double>(k) + 0.5) * dt;
      visit(seg, t_mid, dt, t_global + k * dt);
    }
    t_global += dur;
  }
}

double subspace_leakage(const MatX& u) {
  if (u.rows() <= 2) return 0.0;
  double leak = 0.0;
  for (int col = 0; col < 2; ++col) {
    for (int row = 2; row < u.rows(); ++row) leak += std::norm(u(row, col));
  }
  return 0.5 * leak;
}

std::vector<std::pair<MatX, double>> collapse_operators(const QubitModel& qubit) {
  std::vector<std::pair<MatX, double>> ops;
  const int d = qubit.level_count;
  if (qubit.t1 != kInfTime) {
    MatX lower = MatX::Zero(d, d);
    for (int n = 1; n < d; ++n) lower(n - 1, n) = std::sqrt(static_cast<double>(n));
    ops.emplace_back(lower, 1.0 / qubit.t1);
  }
  if (qubit.tphi != kInfTime) {
    // Level-projective dephasing; for two levels this equals the
    // sigma_z/sqrt(2 Tphi) convention and decays coherences at 1/Tphi.
    for (int n = 0; n < d; ++n) {
      MatX proj = MatX::Zero(d, d);
      proj(n, n) = 1.0;
      ops.emplace_back(proj, 1.0 / qubit.tphi);
    }
  }
  return ops;
}

MatX dissipator_superoperator(const QubitModel& qubit) {
  const int d = qubit.level_count;
  const MatX eye = MatX::Identity(d, d);
  MatX diss = MatX::Zero(d * d, d * d);
  for (const auto& [op, rate] : collapse_operators(qubit)) {
    const MatX ldl = op.adjoint() * op;
    diss += rate * (kron(op.conjugate(), op) - 0.5 * kron(eye, ldl) -
                    0.5 * kron(ldl.transpose(), eye));
  }
  return diss;
}

MatX hamiltonian_superoperator(const MatX& h) {
  const int d = static_cast<int>(h.rows());
  const MatX eye = MatX::Identity(d, d);
  return -kI * (kron(eye, h) - kron(h.transpose(), eye));
}

}  // namespace

Mat2 step_hamiltonian(const PulseSegment& seg, double t_local, const ErrorModel& err,
                      double omega_max) {
  return two_level_hamiltonian(sample_drive(seg, t_local, err, omega_max));
}

void for_each_step(const PulseSchedule& schedule, double step,
                   const std::function<void(const PulseSegment&, double, double)>& visit) {
  walk_steps(schedule, step,
             [&](const PulseSegment& seg, double t_mid, double dt, double) { visit(seg, t_mid, dt); });
}

void QubitModel::validate() const {
  if (level_count != 2 && level_count != 3) {
    throw NumericalError("QubitModel: level_count must be 2 or 3");
  }
  if (!(t1 > 0.0) || !(tphi > 0.0)) throw NumericalError("QubitModel: T1 and Tphi must be > 0");
  if (level_count == 3 && anharmonicity == 0.0) {
    throw NumericalError("QubitModel: three-level model needs a nonzero anharmonicity");
  }
}

UnitaryResult propagate_unitary(const PulseSchedule& schedule, const ErrorModel& err, double step,
                                const QubitModel& qubit) {
  qubit.validate();
  if (qubit.level_count == 3) return propagate_qutrit(schedule, err, qubit, step);

  const double omega_max = err.resolved_omega_max(schedule);
  Mat2 u = Mat2::Identity();
  walk_steps(schedule, step, [&](const PulseSegment& seg, double t_mid, double dt, double) {
    const StepDrive d = sample_drive(seg, t_mid, err, omega_max);
    u = su2_step(d.omega * std::cos(d.phi), d.omega * std::sin(d.phi), -d.detuning, dt) * u;
  });
  UnitaryResult res;
  res.u = u;
  return res;
}

UnitaryResult propagate_qutrit(const PulseSchedule& schedule, const ErrorModel& err,
                               const QubitModel& qubit, double step) {
  if (qubit.level_count != 3) throw NumericalError("propagate_qutrit: level_count must be 3");
  qubit.validate();

  const double omega_max = err.resolved_omega_max(schedule);
  Mat3 u = Mat3::Identity();
  walk_steps(schedule, step, [&](const PulseSegment& seg, double t_mid, double dt, double) {
    const StepDrive d = sample_drive(seg, t_mid, err, omega_max);
    u = herm_exp_step(three_level_hamiltonian(d, qubit, seg.drag_enabled, seg.drag_coefficient),
                      dt) *
        u;
  });
  UnitaryResult res;
  res.u = u;
  res.leakage = subspace_leakage(u);
  return res;
}

DensityResult propagate_density(const PulseSchedule& schedule, const ErrorModel& err,
                                const QubitModel& qubit, const MatX& rho0, double step) {
  qubit.validate();
  const int d = qubit.level_count;
  if (rho0.rows() != d || rho0.cols() != d) {
    throw NumericalError("propagate_density: initial state dimension mismatch");
  }
  if ((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() > 1e-9 ||
      std::abs(rho0.trace().real() - 1.0) > 1e-9) {
    throw NumericalError("propagate_density: rho0 must be Hermitian with unit trace");
  }
  Eigen::SelfAdjointEigenSolver<MatX> es0(rho0);
  if (es0.eigenvalues().minCoeff() < -1e-9) {
    throw NumericalError("propagate_density: rho0 must be positive semidefinite");
  }

  const MatX s = schedule_superoperator(schedule, err, qubit, step);
  VecX rho_vec = VecX::Zero(d * d);
  for (int col = 0; col < d; ++col) {
    for (int row = 0; row < d; ++row) rho_vec(col * d + row) = rho0(row, col);
  }
  rho_vec = s * rho_vec;

  DensityResult res;
  res.rho = MatX::Zero(d, d);
  for (int col = 0; col < d; ++col) {
    for (int row = 0; row < d; ++row) res.rho(row, col) = rho_vec(col * d + row);
  }
  for (int lvl = 2; lvl < d; ++lvl) res.leakage += res.rho(lvl, lvl).real();
  return res;
}

MatX schedule_superoperator(const PulseSchedule& schedule, const ErrorModel& err,
                            const QubitModel& qubit, double step) {
  qubit.validate();
  const int d = qubit.level_count;

  if (qubit.lossless()) {
    const UnitaryResult unit = d == 2 ? propagate_unitary(schedule, err, step, qubit)
                                      : propagate_qutrit(schedule, err, qubit, step);
    return unitary_superoperator(unit.u);
  }

  const double omega_max = err.resolved_omega_max(schedule);
  const MatX diss = dissipator_superoperator(qubit);
  MatX s = MatX::Identity(d * d, d * d);
  walk_steps(schedule, step, [&](const PulseSegment& seg, double t_mid, double dt, double) {
    const StepDrive drv = sample_drive(seg, t_mid, err, omega_max);
    MatX h;
    if (d == 2) {
      h = two_level_hamiltonian(drv);
    } else {
      h = three_level_hamiltonian(drv, qubit, seg.drag_enabled, seg.drag_coefficient);
    }
    const MatX lv = (hamiltonian_superoperator(h) + diss) * dt;
    s = lv.exp() * s;
  });

  // A schedule with no drive time still decoheres for zero duration, i.e.
  // the channel is the identity.
  return s;
}

std::vector<BlochSample> bloch_trajectory(const PulseSchedule& schedule, const Vec2& psi0,
                                          const ErrorModel& err, double step) {
  const double omega_max = err.resolved_omega_max(schedule);
  Vec2 psi = psi0.normalized();
  std::vector<BlochSample> samples;

  auto record = [&](double t) {
    BlochSample b;
    b.t = t;
    const Complex coh = std::conj(psi(0)) * psi(1);
    b.x = 2.0 * coh.real();
    b.y = 2.0 * coh.imag();
    b.z = std::norm(psi(0)) - std::norm(psi(1));
    samples.push_back(b);
  };

  record(0.0);
  walk_steps(schedule, step, [&](const PulseSegment& seg, double t_mid, double dt, double t0) {
    const StepDrive d = sample_drive(seg, t_mid, err, omega_max);
    psi = su2_step(d.omega * std::cos(d.phi), d.omega * std::sin(d.phi), -d.detuning, dt) * psi;
    record(t0 + dt);
  });
  return samples;
}

PhaseAudit phase_audit(const PulseSchedule& schedule, const GateSpec& spec, double step) {
  PhaseAudit audit;
  if (schedule.empty()) return audit;

  Vec2 psi;
  psi << std::cos(0.5 * spec.chi1), std::sin(0.5 * spec.chi1) * std::exp(kI * spec.xi1);

  double xi_prev = spec.xi1;
  double z_prev = std::cos(spec.chi1);
  const ErrorModel ideal{};

  walk_steps(schedule, step, [&](const PulseSegment& seg, double t_mid, double dt, double) {
    const StepDrive d = sample_drive(seg, t_mid, ideal, 0.0);
    const Mat2 h = two_level_hamiltonian(d);

    if (seg.phase_kind == PhaseLawKind::RunningXi) {
      // Midpoint evaluation of <psi|H|psi> along the actual evolved state.
      const Vec2 psi_mid =
          su2_step(d.omega * std::cos(d.phi), d.omega * std::sin(d.phi), -d.detuning, 0.5 * dt) *
          psi;
      audit.dynamical -= (psi_mid.adjoint() * h * psi_mid)(0).real() * dt;
    }

    psi = su2_step(d.omega * std::cos(d.phi), d.omega * std::sin(d.phi), -d.detuning, dt) * psi;

    // Accumulate the solid-angle integrand from the evolved Bloch path with
    // an unwrapped azimuth.
    const Complex coh = std::conj(psi(0)) * psi(1);
    const double z = std::norm(psi(0)) - std::norm(psi(1));
    const double r_xy = 2.0 * std::abs(coh);
    double xi = xi_prev;
    if (r_xy > 1e-12) {
      xi = std::arg(coh);
      while (xi - xi_prev > kPi) xi -= kTwoPi;
      while (xi - xi_prev < -kPi) xi += kTwoPi;
    }
    audit.geometric += -0.5 * (xi - xi_prev) * (1.0 - 0.5 * (z + z_prev));
    xi_prev = xi;
    z_prev = z;
  });
  return audit;
}

}  // namespace geomgate
