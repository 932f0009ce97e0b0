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
#include <string>
#include <vector>

#include "geomgate/linalg.hpp"

namespace geomgate {

// Single-qubit pre-rotations applied before the joint readout.
enum class PreRotation : int { I = 0, X, XHalfPlus, XHalfMinus, YHalfPlus, YHalfMinus };
inline constexpr int kPreRotationCount = 6;

Mat2 prerotation_unitary(PreRotation r);
std::string prerotation_name(PreRotation r);

// Joint dispersive readout modeled as a weighted sum of basis-state
// populations. Informational completeness under the 36 pre-rotation pairs
// requires a nonzero ZZ component, (w00 - w01 - w10 + w11)/4 != 0; the
// default weights satisfy that.
struct ReadoutModel {
  std::array<double, 4> weights = {4.0, 2.0, 1.0, 0.0};
};

struct TomographyRecord {
  PreRotation rot_a = PreRotation::I;
  PreRotation rot_b = PreRotation::I;
  double expectation = 0.0;
};

// Expectation of the rotated joint observable for all 36 pre-rotation
// pairs; exact for shots = 0, multinomially sampled otherwise with a
// per-record RNG stream derived from (seed, record index).
std::vector<TomographyRecord> simulate_tomography(const Mat4& rho, const ReadoutModel& readout,
                                                  long shots = 0, std::uint64_t seed = 0);

struct Reconstruction {
  Mat4 rho;
  double residual = 0.0;  // least-squares residual norm before projection
  int rank = 0;
};

// Least-squares linear inversion over a Hermitian operator basis followed by
// projection to the nearest unit-trace PSD matrix (eigenvalue clipping and
// renormalization). Throws when the design matrix is rank deficient.
Reconstruction reconstruct(const std::vector<TomographyRecord>& records,
                           const ReadoutModel& readout);

// Rank of the 36 x 16 design matrix for the given readout weights.
int tomography_design_rank(const ReadoutModel& readout);

double state_fidelity(const MatX& rho, const VecX& psi);

}  // namespace geomgate
