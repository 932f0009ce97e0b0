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

#include "geomgate/clifford.hpp"

#include <cmath>

#include "geomgate/errors.hpp"
#include "geomgate/rng.hpp"
#include "geomgate/units.hpp"

namespace geomgate {

namespace {

Mat2 rx(double theta) {
  Mat2 u;
  const double c = std::cos(0.5 * theta);
  const Complex s(0.0, -std::sin(0.5 * theta));
  u << c, s, s, c;
  return u;
}

Mat2 ry(double theta) {
  Mat2 u;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  u << c, -s, s, c;
  return u;
}

Mat2 word_unitary(const std::vector<Generator>& word) {
  Mat2 u = Mat2::Identity();
  for (Generator g : word) u = generator_unitary(g) * u;
  return u;
}

using G = Generator;

std::vector<CliffordElement> build_table() {
  // Standard 24-element decomposition over {I, +-X/2, +-Y/2, X, Y}:
  // 4 Paulis, 8 2pi/3 axis cycles, 6 pi/2 rotations, 6 Hadamard-like pi
  // rotations. Words are in execution order; 45 generators total (1.875 per
  // Clifford on average).
  const std::vector<std::vector<Generator>> words = {
      {G::I},
      {G::X},
      {G::Y},
      {G::Y, G::X},
      {G::XHalf, G::YHalf},
      {G::XHalf, G::YHalfNeg},
      {G::XHalfNeg, G::YHalf},
      {G::XHalfNeg, G::YHalfNeg},
      {G::YHalf, G::XHalf},
      {G::YHalf, G::XHalfNeg},
      {G::YHalfNeg, G::XHalf},
      {G::YHalfNeg, G::XHalfNeg},
      {G::XHalf},
      {G::XHalfNeg},
      {G::YHalf},
      {G::YHalfNeg},
      {G::XHalfNeg, G::YHalf, G::XHalf},
      {G::XHalfNeg, G::YHalfNeg, G::XHalf},
      {G::X, G::YHalf},
      {G::X, G::YHalfNeg},
      {G::Y, G::XHalf},
      {G::Y, G::XHalfNeg},
      {G::XHalf, G::YHalf, G::XHalf},
      {G::XHalfNeg, G::YHalf, G::XHalfNeg},
  };

  std::vector<CliffordElement> table;
  table.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    CliffordElement el;
    el.index = static_cast<int>(i);
    el.word = words[i];
    el.matrix = word_unitary(words[i]);
    table.push_back(std::move(el));
  }
  return table;
}

struct GroupCache {
  std::vector<CliffordElement> table;
  std::array<std::array<int, 24>, 24> product{};
  std::array<int, 24> inverse{};
};

const GroupCache& cache() {
  static const GroupCache c = [] {
    GroupCache g;
    g.table = build_table();
    for (int a = 0; a < 24; ++a) {
      for (int b = 0; b < 24; ++b) {
        const Mat2 prod = g.table[a].matrix * g.table[b].matrix;
        int idx = -1;
        for (int k = 0; k < 24; ++k) {
          if (phase_aligned_overlap(g.table[k].matrix, prod) > 1.0 - 1e-9) {
            idx = k;
            break;
          }
        }
        if (idx < 0) throw NumericalError("clifford table is not closed");
        g.product[a][b] = idx;
      }
    }
    for (int a = 0; a < 24; ++a) {
      g.inverse[a] = -1;
      for (int b = 0; b < 24; ++b) {
        if (g.product[a][b] == 0) {
          g.inverse[a] = b;
          break;
        }
      }
      if (g.inverse[a] < 0) throw NumericalError("clifford element without inverse");
    }
    return g;
  }();
  return c;
}

}  // namespace

std::string generator_name(Generator g) {
  switch (g) {
    case G::I: return "I";
    case G::XHalf: return "X/2";
    case G::XHalfNeg: return "-X/2";
    case G::YHalf: return "Y/2";
    case G::YHalfNeg: return "-Y/2";
    case G::X: return "X";
    case G::Y: return "Y";
  }
  return "?";
}

Mat2 generator_unitary(Generator g) {
  switch (g) {
    case G::I: return Mat2::Identity();
    case G::XHalf: return rx(kPi / 2.0);
    case G::XHalfNeg: return rx(-kPi / 2.0);
    case G::YHalf: return ry(kPi / 2.0);
    case G::YHalfNeg: return ry(-kPi / 2.0);
    case G::X: return rx(kPi);
    case G::Y: return ry(kPi);
  }
  throw NumericalError("unknown generator");
}

const std::vector<CliffordElement>& clifford_table() { return cache().table; }

int lookup_clifford(const Mat2& u) {
  const auto& table = cache().table;
  for (const auto& el : table) {
    if (phase_aligned_overlap(el.matrix, u) > 1.0 - 1e-9) return el.index;
  }
  return -1;
}

int clifford_product(int a, int b) { return cache().product[a][b]; }

int clifford_inverse(int a) { return cache().inverse[a]; }

double mean_word_length() {
  double total = 0.0;
  for (const auto& el : clifford_table()) total += static_cast<double>(el.word.size());
  return total / static_cast<double>(clifford_table().size());
}

RBSequence generate_sequence(int m, std::uint64_t stream_seed, int interleaved_index) {
  if (m < 1) throw NumericalError("generate_sequence: m must be >= 1");
  Rng rng(stream_seed);
  RBSequence seq;
  seq.cliffords.reserve(m);
  int running = 0;  // identity
  for (int i = 0; i < m; ++i) {
    const int c = static_cast<int>(rng.next_below(24));
    seq.cliffords.push_back(c);
    running = clifford_product(c, running);
    if (interleaved_index >= 0) running = clifford_product(interleaved_index, running);
  }
  seq.recovery = clifford_inverse(running);
  return seq;
}

}  // namespace geomgate
