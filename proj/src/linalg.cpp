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

#include "geomgate/linalg.hpp"

#include "geomgate/errors.hpp"

namespace geomgate {

double gate_fidelity(const MatX& target, const MatX& actual) {
  const int d = static_cast<int>(target.cols());
  if (actual.rows() < d || actual.cols() < d) {
    throw NumericalError("gate_fidelity: dimension mismatch");
  }
  const MatX block = actual.topLeftCorner(d, d);
  const double tr = std::abs((target.adjoint() * block).trace());
  return (tr * tr + d) / (d * (d + 1.0));
}

MatX kron(const MatX& a, const MatX& b) {
  MatX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

MatX unitary_superoperator(const MatX& u) { return kron(u.conjugate(), u); }

}  // namespace geomgate
