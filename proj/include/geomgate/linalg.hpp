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

#include <Eigen/Dense>
#include <complex>

namespace geomgate {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3cd;
using Mat4 = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;
using Vec2 = Eigen::Vector2cd;
using Vec3 = Eigen::Vector3cd;
using Vec4 = Eigen::Vector4cd;
using VecX = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

inline bool is_unitary(const MatX& u, double tol = 1e-10) {
  return (u.adjoint() * u - MatX::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff() < tol;
}

// |Tr(U†V)| / d: 1 iff V = e^{iθ}U.
inline double phase_aligned_overlap(const MatX& u, const MatX& v) {
  return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.cols());
}

// Average gate fidelity F = (|Tr(U†V)|² + d) / (d(d+1)). When V is larger
// than U (three-level propagation scored against a qubit target) the
// upper-left qubit block of V is used and any norm loss counts as error.
double gate_fidelity(const MatX& target, const MatX& actual);

// Column-stacking vectorization helpers for superoperators:
// vec(A ρ B) = (Bᵀ ⊗ A) vec(ρ).
MatX kron(const MatX& a, const MatX& b);
MatX unitary_superoperator(const MatX& u);

}  // namespace geomgate
