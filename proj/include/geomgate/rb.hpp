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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geomgate/clifford.hpp"
#include "geomgate/expfit.hpp"
#include "geomgate/propagation.hpp"
#include "geomgate/schedule.hpp"

namespace geomgate {

// Pulse schedules for every physical generator, plus an optional interleaved
// gate schedule with its ideal Clifford index.
struct GateBank {
  std::array<PulseSchedule, kGeneratorCount> generators;
  std::optional<PulseSchedule> interleaved;
  int interleaved_index = -1;
  ScheduleKind kind = ScheduleKind::Geometric;
  double omega_max = 0.0;  // max amplitude across the bank
};

GateBank make_gate_bank(ScheduleKind kind, const EnvelopeSpec& env, const TimingPolicy& timing = {});

// Interleaved gate by label: "2T" (two T schedules in series, a Clifford
// even though T alone is not), "S", or "H".
PulseSchedule interleaved_gate_schedule(const std::string& label, ScheduleKind kind,
                                        const EnvelopeSpec& env, const TimingPolicy& timing = {});
Mat2 interleaved_gate_target(const std::string& label);

// The 24 Clifford channels (d^2 x d^2 superoperators) composed from the
// bank's generator channels under a common error/noise model.
struct CliffordChannels {
  std::vector<MatX> clifford;
  MatX interleaved;
  int interleaved_index = -1;
  int dim = 2;
};

CliffordChannels build_channels(const GateBank& bank, const ErrorModel& err,
                                const QubitModel& qubit, double step = kDefaultStep);

struct RBConfig {
  std::vector<int> lengths = {1, 2, 4, 8, 16, 32, 64, 128};
  int sequences_per_length = 30;
  std::uint64_t seed = 1;
  long shots = 0;  // 0 = exact expectation values
  double readout_error = 0.0;
  bool interleaved = false;

  void validate() const;
};

struct RBPoint {
  int m = 0;
  double mean_f = 0.0;
  double sem_f = 0.0;
  int n_seq = 0;
};

struct RBResult {
  std::vector<RBPoint> points;
  ExpFitResult fit;
};

// Survival probability of |0> after the recovery element, averaged per
// length, fitted to a * p^m + b. Per-sequence RNG streams are derived from
// (seed, length, index) so any evaluation order gives identical results.
RBResult run_rb(const RBConfig& config, const CliffordChannels& channels);

struct InterleavedRBResult {
  RBResult reference;
  RBResult interleaved;
  double f_ref = 0.0;
  double f_itl = 0.0;
  bool clamped = false;
};

InterleavedRBResult run_interleaved_rb(const RBConfig& config, const CliffordChannels& channels);

// F_ref = 1 - (1 - p_ref) (d-1)/d / 1.875 with d = 2 (the 1.875 is the mean
// generator count per Clifford of the decomposition in use).
double reference_fidelity(double p_ref);

struct InterleavedFidelity {
  double value = 0.0;
  bool clamped = false;  // p_itl > p_ref is nonphysical; value clamped to 1
};

// F_itl = 1 - (1 - p_itl/p_ref) (d-1)/d with d = 2.
InterleavedFidelity interleaved_fidelity(double p_itl, double p_ref);

enum class ErrorAxis { Epsilon, Delta };

struct SweepConfig {
  ErrorAxis axis = ErrorAxis::Epsilon;
  std::vector<double> grid;
  std::vector<std::string> gates = {"2T", "S", "H"};
  std::vector<ScheduleKind> kinds = {ScheduleKind::Geometric, ScheduleKind::Dynamical};
  RBConfig rb;
  EnvelopeSpec envelope;
  TimingPolicy timing;
  QubitModel qubit;
  double step = kDefaultStep;
  bool refit = false;  // fit p per grid point instead of reporting mean F
};

struct SweepRow {
  double axis_value = 0.0;
  ScheduleKind kind = ScheduleKind::Geometric;
  std::string gate;
  double mean_f = 0.0;       // mean interleaved sequence fidelity over lengths
  double infidelity = 0.0;   // direct gate infidelity at this error point
  double fitted_p = 0.0;     // refit mode only
};

std::vector<SweepRow> error_sweep(const SweepConfig& config);

// True when, for every gate and grid magnitude, the geometric rows dominate
// the dynamical ones (sequence fidelity >=, direct infidelity <).
bool sweep_ordering_holds(const std::vector<SweepRow>& rows, std::string* report = nullptr);

}  // namespace geomgate
