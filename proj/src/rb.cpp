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

#include "geomgate/rb.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geomgate/errors.hpp"
#include "geomgate/rng.hpp"
#include "geomgate/units.hpp"

namespace geomgate {

namespace {

PulseSchedule generator_schedule(Generator g, ScheduleKind kind, const EnvelopeSpec& env,
                                 const TimingPolicy& timing) {
  PulseSchedule sched;
  if (g == Generator::I) {
    sched.kind = kind;
    sched.label = "I";
    return sched;
  }

  struct AxisAngle {
    RotationAxis axis;
    double angle;
  };
  AxisAngle aa{};
  switch (g) {
    case Generator::XHalf: aa = {RotationAxis::X, kPi / 2.0}; break;
    case Generator::XHalfNeg: aa = {RotationAxis::X, -kPi / 2.0}; break;
    case Generator::YHalf: aa = {RotationAxis::Y, kPi / 2.0}; break;
    case Generator::YHalfNeg: aa = {RotationAxis::Y, -kPi / 2.0}; break;
    case Generator::X: aa = {RotationAxis::X, kPi}; break;
    case Generator::Y: aa = {RotationAxis::Y, kPi}; break;
    case Generator::I: break;
  }

  if (kind == ScheduleKind::Geometric) {
    sched = synthesize_ncna(rotation_gate_spec(aa.axis, aa.angle), env, timing);
    sched.kind = ScheduleKind::Geometric;
  } else {
    // Direct resonant rotation: phase picks the axis, a pi offset the sign.
    const double phi = (aa.axis == RotationAxis::X ? 0.0 : kPi / 2.0) + (aa.angle < 0 ? kPi : 0.0);
    sched.kind = ScheduleKind::Dynamical;
    sched.segments.push_back(rotation_pulse(phi, std::abs(aa.angle), env, timing));
  }
  sched.label = generator_name(g);
  return sched;
}

}  // namespace

GateBank make_gate_bank(ScheduleKind kind, const EnvelopeSpec& env, const TimingPolicy& timing) {
  GateBank bank;
  bank.kind = kind;
  for (int i = 0; i < kGeneratorCount; ++i) {
    bank.generators[i] = generator_schedule(static_cast<Generator>(i), kind, env, timing);
    bank.omega_max = std::max(bank.omega_max, bank.generators[i].max_amplitude());
  }
  return bank;
}

PulseSchedule interleaved_gate_schedule(const std::string& label, ScheduleKind kind,
                                        const EnvelopeSpec& env, const TimingPolicy& timing) {
  auto one = [&](StandardGate g) {
    PulseSchedule s = kind == ScheduleKind::Geometric
                          ? synthesize_ncna(standard_gate(g), env, timing)
                          : synthesize_dynamical(g, env, timing);
    s.kind = kind;
    s.label = standard_gate_name(g);
    return s;
  };
  if (label == "2T") {
    PulseSchedule t = one(StandardGate::T);
    PulseSchedule s = concat_schedules({t, t}, "2T");
    s.kind = kind;
    return s;
  }
  if (label == "S") return one(StandardGate::S);
  if (label == "H") return one(StandardGate::H);
  throw ConfigError("unknown interleaved gate label: " + label);
}

Mat2 interleaved_gate_target(const std::string& label) {
  if (label == "2T") {
    const Mat2 t = target_unitary(standard_gate(StandardGate::T));
    return t * t;
  }
  if (label == "S") return target_unitary(standard_gate(StandardGate::S));
  if (label == "H") return target_unitary(standard_gate(StandardGate::H));
  throw ConfigError("unknown interleaved gate label: " + label);
}

CliffordChannels build_channels(const GateBank& bank, const ErrorModel& err,
                                const QubitModel& qubit, double step) {
  CliffordChannels ch;
  ch.dim = qubit.level_count;

  // Omega_m is a property of the whole bank (its strongest pulse), so the
  // detuning error is identical across gates of one run.
  ErrorModel bank_err = err;
  if (bank_err.omega_max <= 0.0) {
    bank_err.omega_max = bank.omega_max;
    if (bank.interleaved) {
      bank_err.omega_max = std::max(bank_err.omega_max, bank.interleaved->max_amplitude());
    }
  }

  std::array<MatX, kGeneratorCount> gen_channels;
  for (int i = 0; i < kGeneratorCount; ++i) {
    gen_channels[i] = schedule_superoperator(bank.generators[i], bank_err, qubit, step);
  }

  ch.clifford.reserve(clifford_table().size());
  for (const auto& el : clifford_table()) {
    MatX s = MatX::Identity(ch.dim * ch.dim, ch.dim * ch.dim);
    for (Generator g : el.word) s = gen_channels[static_cast<int>(g)] * s;
    ch.clifford.push_back(std::move(s));
  }

  if (bank.interleaved) {
    ch.interleaved = schedule_superoperator(*bank.interleaved, bank_err, qubit, step);
    ch.interleaved_index = bank.interleaved_index;
    if (ch.interleaved_index < 0) {
      throw NumericalError("interleaved schedule without a Clifford index");
    }
  }
  return ch;
}

void RBConfig::validate() const {
  if (lengths.empty() || sequences_per_length < 1) {
    throw ConfigError("RB config needs lengths >= 1 and sequences >= 1");
  }
  for (int m : lengths) {
    if (m < 1) throw ConfigError("RB sequence lengths must be >= 1");
  }
  if (readout_error < 0.0 || readout_error > 0.5) {
    throw ConfigError("readout assignment error must lie in [0, 0.5]");
  }
}

RBResult run_rb(const RBConfig& config, const CliffordChannels& channels) {
  config.validate();
  if (config.interleaved && channels.interleaved_index < 0) {
    throw ConfigError("interleaved RB requested but the bank has no interleaved gate");
  }

  const int d = channels.dim;
  VecX rho0 = VecX::Zero(d * d);
  rho0(0) = 1.0;  // |0><0| column-stacked

  RBResult result;
  std::vector<double> fit_m, fit_f;

  for (int m : config.lengths) {
    double sum = 0.0, sum_sq = 0.0;
    for (int idx = 0; idx < config.sequences_per_length; ++idx) {
      const std::uint64_t stream =
          derive_stream(config.seed, static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(idx));
      const RBSequence seq = generate_sequence(
          m, stream, config.interleaved ? channels.interleaved_index : -1);

      VecX rho = rho0;
      for (int c : seq.cliffords) {
        rho = channels.clifford[c] * rho;
        if (config.interleaved) rho = channels.interleaved * rho;
      }
      rho = channels.clifford[seq.recovery] * rho;

      double p0 = rho(0).real();
      p0 = std::clamp(p0, 0.0, 1.0);
      double f = (1.0 - config.readout_error) * p0 + config.readout_error * (1.0 - p0);
      if (config.shots > 0) {
        Rng shot_rng(mix64(stream ^ 0x517cc1b727220a95ULL));
        f = static_cast<double>(shot_rng.binomial(config.shots, f)) /
            static_cast<double>(config.shots);
      }
      sum += f;
      sum_sq += f * f;
    }
    RBPoint pt;
    pt.m = m;
    pt.n_seq = config.sequences_per_length;
    pt.mean_f = sum / pt.n_seq;
    const double var = std::max(0.0, sum_sq / pt.n_seq - pt.mean_f * pt.mean_f);
    pt.sem_f = pt.n_seq > 1 ? std::sqrt(var / (pt.n_seq - 1)) : 0.0;
    result.points.push_back(pt);
    fit_m.push_back(static_cast<double>(m));
    fit_f.push_back(pt.mean_f);
  }

  result.fit = fit_exponential_decay(fit_m, fit_f);
  return result;
}

InterleavedRBResult run_interleaved_rb(const RBConfig& config, const CliffordChannels& channels) {
  InterleavedRBResult out;
  RBConfig ref_cfg = config;
  ref_cfg.interleaved = false;
  out.reference = run_rb(ref_cfg, channels);

  RBConfig itl_cfg = config;
  itl_cfg.interleaved = true;
  out.interleaved = run_rb(itl_cfg, channels);

  out.f_ref = reference_fidelity(out.reference.fit.p);
  const InterleavedFidelity fi = interleaved_fidelity(out.interleaved.fit.p, out.reference.fit.p);
  out.f_itl = fi.value;
  out.clamped = fi.clamped;
  return out;
}

double reference_fidelity(double p_ref) {
  constexpr double d = 2.0;
  return 1.0 - (1.0 - p_ref) * (d - 1.0) / d / 1.875;
}

InterleavedFidelity interleaved_fidelity(double p_itl, double p_ref) {
  constexpr double d = 2.0;
  InterleavedFidelity out;
  if (!(p_ref > 0.0)) throw NumericalError("interleaved_fidelity: p_ref must be positive");
  const double ratio = p_itl / p_ref;
  out.value = 1.0 - (1.0 - ratio) * (d - 1.0) / d;
  if (ratio > 1.0) {
    out.value = 1.0;
    out.clamped = true;
  }
  return out;
}

std::vector<SweepRow> error_sweep(const SweepConfig& config) {
  if (config.grid.empty()) throw ConfigError("error sweep needs a nonempty grid");

  std::vector<SweepRow> rows;
  for (const ScheduleKind kind : config.kinds) {
    for (const std::string& gate : config.gates) {
      GateBank bank = make_gate_bank(kind, config.envelope, config.timing);
      bank.interleaved = interleaved_gate_schedule(gate, kind, config.envelope, config.timing);
      const Mat2 target = interleaved_gate_target(gate);
      bank.interleaved_index = lookup_clifford(target);

      for (double value : config.grid) {
        ErrorModel err;
        if (config.axis == ErrorAxis::Epsilon) {
          err.epsilon = value;
        } else {
          err.delta = value;
        }

        const CliffordChannels channels = build_channels(bank, err, config.qubit, config.step);
        RBConfig rb_cfg = config.rb;
        rb_cfg.interleaved = true;
        const RBResult rb = run_rb(rb_cfg, channels);

        SweepRow row;
        row.axis_value = value;
        row.kind = kind;
        row.gate = gate;
        double mean = 0.0;
        for (const auto& pt : rb.points) mean += pt.mean_f;
        row.mean_f = mean / static_cast<double>(rb.points.size());
        if (config.refit) row.fitted_p = rb.fit.p;

        ErrorModel gate_err = err;
        gate_err.omega_max = bank.interleaved->max_amplitude();
        const UnitaryResult u = propagate_unitary(*bank.interleaved, gate_err, config.step);
        row.infidelity = 1.0 - gate_fidelity(target, u.u);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

bool sweep_ordering_holds(const std::vector<SweepRow>& rows, std::string* report) {
  bool ok = true;
  std::ostringstream msg;
  for (const auto& row : rows) {
    if (row.kind != ScheduleKind::Geometric || row.axis_value == 0.0) continue;
    const SweepRow* dyn = nullptr;
    for (const auto& other : rows) {
      if (other.kind == ScheduleKind::Dynamical && other.gate == row.gate &&
          other.axis_value == row.axis_value) {
        dyn = &other;
        break;
      }
    }
    if (!dyn) continue;
    if (row.mean_f < dyn->mean_f - 1e-12) {
      ok = false;
      msg << "sequence fidelity ordering violated for " << row.gate << " at "
          << row.axis_value << ": geometric " << row.mean_f << " < dynamical " << dyn->mean_f
          << "\n";
    }
    if (row.infidelity >= dyn->infidelity) {
      ok = false;
      msg << "gate infidelity ordering violated for " << row.gate << " at " << row.axis_value
          << ": geometric " << row.infidelity << " >= dynamical " << dyn->infidelity << "\n";
    }
  }
  if (report) *report = msg.str();
  return ok;
}

}  // namespace geomgate
