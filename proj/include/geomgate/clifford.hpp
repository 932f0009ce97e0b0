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

// Physical generators the Clifford decomposition is written over. The
// identity counts as one word entry (an idle).
enum class Generator : int { I = 0, XHalf, XHalfNeg, YHalf, YHalfNeg, X, Y };
inline constexpr int kGeneratorCount = 7;

std::string generator_name(Generator g);
Mat2 generator_unitary(Generator g);

// One of the 24 single-qubit Cliffords: its matrix (a representative up to
// global phase) and its generator word in execution order. The decomposition
// averages 1.875 generators per Clifford over the uniform group.
struct CliffordElement {
  int index = 0;
  Mat2 matrix;
  std::vector<Generator> word;
};

const std::vector<CliffordElement>& clifford_table();

// Index of the element equal to u up to global phase; -1 if none.
int lookup_clifford(const Mat2& u);
int clifford_product(int a, int b);  // index of table[a] * table[b]
int clifford_inverse(int a);
double mean_word_length();

struct RBSequence {
  std::vector<int> cliffords;
  int recovery = 0;
};

// Draw m uniform Cliffords from the per-sequence stream and compute the
// recovery element. In interleaved mode the interleaved Clifford follows
// every drawn element and is folded into the recovery.
RBSequence generate_sequence(int m, std::uint64_t stream_seed, int interleaved_index = -1);

}  // namespace geomgate
