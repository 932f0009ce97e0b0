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

#include "geomgate/tomography.hpp"

#include <cmath>
#include <sstream>

#include "geomgate/errors.hpp"
#include "geomgate/rng.hpp"
#include "geomgate/units.hpp"

namespace geomgate {

namespace {

constexpr double kRankTol = 1e-9;

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

// Orthonormal-ish Hermitian operator basis for 4x4 matrices: 4 diagonal
// projectors, then real and imaginary elementary off-diagonal pairs.
const std::vector<Mat4>& hermitian_basis() {
  static const std::vector<Mat4> basis = [] {
    std::vector<Mat4> b;
    for (int k = 0; k < 4; ++k) {
      Mat4 m = Mat4::Zero();
      m(k, k) = 1.0;
      b.push_back(m);
    }
    for (int k = 0; k < 4; ++k) {
      for (int l = k + 1; l < 4; ++l) {
        Mat4 re = Mat4::Zero();
        re(k, l) = 1.0;
        re(l, k) = 1.0;
        b.push_back(re);
        Mat4 im = Mat4::Zero();
        im(k, l) = Complex(0.0, -1.0);
        im(l, k) = Complex(0.0, 1.0);
        b.push_back(im);
      }
    }
    return b;
  }();
  return basis;
}

Mat4 rotated_observable(PreRotation a, PreRotation b, const ReadoutModel& readout) {
  const MatX r = kron(prerotation_unitary(a), prerotation_unitary(b));
  Mat4 m = Mat4::Zero();
  for (int k = 0; k < 4; ++k) m(k, k) = readout.weights[static_cast<std::size_t>(k)];
  return Mat4(r.adjoint() * m * r);
}

Eigen::MatrixXd design_matrix(const ReadoutModel& readout) {
  const auto& basis = hermitian_basis();
  Eigen::MatrixXd a(kPreRotationCount * kPreRotationCount, 16);
  int row = 0;
  for (int ia = 0; ia < kPreRotationCount; ++ia) {
    for (int ib = 0; ib < kPreRotationCount; ++ib) {
      const Mat4 obs =
          rotated_observable(static_cast<PreRotation>(ia), static_cast<PreRotation>(ib), readout);
      for (int j = 0; j < 16; ++j) {
        a(row, j) = (obs * basis[static_cast<std::size_t>(j)]).trace().real();
      }
      ++row;
    }
  }
  return a;
}

void require_informationally_complete(const ReadoutModel& readout) {
  const int rank = tomography_design_rank(readout);
  if (rank < 16) {
    std::ostringstream msg;
    msg << "joint readout is not informationally complete under the 36 pre-rotations: design "
           "matrix rank "
        << rank << " < 16 (null-space dimension " << (16 - rank)
        << "); the ZZ weight (w00 - w01 - w10 + w11)/4 = "
        << 0.25 * (readout.weights[0] - readout.weights[1] - readout.weights[2] +
                   readout.weights[3])
        << " must be nonzero";
    throw NumericalError(msg.str());
  }
}

}  // namespace

Mat2 prerotation_unitary(PreRotation r) {
  switch (r) {
    case PreRotation::I: return Mat2::Identity();
    case PreRotation::X: return rx(kPi);
    case PreRotation::XHalfPlus: return rx(kPi / 2.0);
    case PreRotation::XHalfMinus: return rx(-kPi / 2.0);
    case PreRotation::YHalfPlus: return ry(kPi / 2.0);
    case PreRotation::YHalfMinus: return ry(-kPi / 2.0);
  }
  throw NumericalError("unknown pre-rotation");
}

std::string prerotation_name(PreRotation r) {
  switch (r) {
    case PreRotation::I: return "I";
    case PreRotation::X: return "X";
    case PreRotation::XHalfPlus: return "X/2";
    case PreRotation::XHalfMinus: return "-X/2";
    case PreRotation::YHalfPlus: return "Y/2";
    case PreRotation::YHalfMinus: return "-Y/2";
  }
  return "?";
}

int tomography_design_rank(const ReadoutModel& readout) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design_matrix(readout));
  const auto& sv = svd.singularValues();
  const double scale = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRankTol * scale) ++rank;
  }
  return rank;
}

std::vector<TomographyRecord> simulate_tomography(const Mat4& rho, const ReadoutModel& readout,
                                                  long shots, std::uint64_t seed) {
  require_informationally_complete(readout);

  std::vector<TomographyRecord> records;
  records.reserve(kPreRotationCount * kPreRotationCount);
  int index = 0;
  for (int ia = 0; ia < kPreRotationCount; ++ia) {
    for (int ib = 0; ib < kPreRotationCount; ++ib) {
      TomographyRecord rec;
      rec.rot_a = static_cast<PreRotation>(ia);
      rec.rot_b = static_cast<PreRotation>(ib);
      const MatX r = kron(prerotation_unitary(rec.rot_a), prerotation_unitary(rec.rot_b));
      const Mat4 rotated = Mat4(r * rho * r.adjoint());
      if (shots <= 0) {
        double e = 0.0;
        for (int k = 0; k < 4; ++k) {
          e += readout.weights[static_cast<std::size_t>(k)] * rotated(k, k).real();
        }
        rec.expectation = e;
      } else {
        // Multinomial sampling over the rotated basis populations.
        std::array<double, 4> p{};
        for (int k = 0; k < 4; ++k) p[static_cast<std::size_t>(k)] = rotated(k, k).real();
        Rng rng(derive_stream(seed, 0x70b0c0deULL, static_cast<std::uint64_t>(index)));
        double sum = 0.0;
        for (long s = 0; s < shots; ++s) {
          const double u = rng.next_double();
          double acc = 0.0;
          int outcome = 3;
          for (int k = 0; k < 4; ++k) {
            acc += std::max(0.0, p[static_cast<std::size_t>(k)]);
            if (u < acc) {
              outcome = k;
              break;
            }
          }
          sum += readout.weights[static_cast<std::size_t>(outcome)];
        }
        rec.expectation = sum / static_cast<double>(shots);
      }
      records.push_back(rec);
      ++index;
    }
  }
  return records;
}

Reconstruction reconstruct(const std::vector<TomographyRecord>& records,
                           const ReadoutModel& readout) {
  if (records.size() < 16) {
    throw NumericalError("reconstruct: need at least 16 independent records");
  }
  require_informationally_complete(readout);

  const auto& basis = hermitian_basis();
  const int n = static_cast<int>(records.size());
  Eigen::MatrixXd a(n, 16);
  Eigen::VectorXd e(n);
  for (int i = 0; i < n; ++i) {
    const Mat4 obs = rotated_observable(records[static_cast<std::size_t>(i)].rot_a,
                                        records[static_cast<std::size_t>(i)].rot_b, readout);
    for (int j = 0; j < 16; ++j) {
      a(i, j) = (obs * basis[static_cast<std::size_t>(j)]).trace().real();
    }
    e(i) = records[static_cast<std::size_t>(i)].expectation;
  }

  const Eigen::VectorXd x = a.colPivHouseholderQr().solve(e);
  Reconstruction out;
  out.rank = 16;
  out.residual = (a * x - e).norm();

  Mat4 rho = Mat4::Zero();
  for (int j = 0; j < 16; ++j) rho += x(j) * basis[static_cast<std::size_t>(j)];

  // Project to the PSD unit-trace cone: clip negative eigenvalues, renormalize.
  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (rho + rho.adjoint()));
  Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0);
  const double tr = ev.sum();
  if (tr <= 0.0) throw NumericalError("reconstruct: projected state has zero trace");
  ev /= tr;
  out.rho = es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  return out;
}

double state_fidelity(const MatX& rho, const VecX& psi) {
  if (rho.rows() != psi.size()) throw NumericalError("state_fidelity: dimension mismatch");
  const double f = (psi.adjoint() * rho * psi)(0).real();
  return std::min(1.0, std::max(0.0, f));
}

}  // namespace geomgate
