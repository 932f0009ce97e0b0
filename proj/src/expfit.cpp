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

#include "geomgate/expfit.hpp"

#include <algorithm>
#include <cmath>

#include "geomgate/errors.hpp"

namespace geomgate {

namespace {
constexpr int kMaxIterations = 200;
constexpr double kStepTol = 1e-14;
constexpr double kPFloor = 1e-9;
}  // namespace

double ExpFitResult::eval(double m) const { return a * std::pow(p, m) + b; }

ExpFitResult fit_exponential_decay(const std::vector<double>& m, const std::vector<double>& f) {
  if (m.size() != f.size() || m.size() < 3) {
    throw NumericalError("fit_exponential_decay: need at least 3 points");
  }
  const int n = static_cast<int>(m.size());

  Eigen::Vector3d theta(0.5, 0.99, 0.5);  // (a, p, b)
  double lambda = 1e-3;

  auto residuals = [&](const Eigen::Vector3d& th, Eigen::VectorXd& r) {
    for (int i = 0; i < n; ++i) r(i) = th(0) * std::pow(th(1), m[i]) + th(2) - f[i];
    return r.squaredNorm();
  };

  Eigen::VectorXd r(n), r_try(n);
  Eigen::MatrixXd jac(n, 3);
  double cost = residuals(theta, r);

  ExpFitResult out;
  for (int it = 0; it < kMaxIterations; ++it) {
    out.iterations = it + 1;
    for (int i = 0; i < n; ++i) {
      const double pm = std::pow(theta(1), m[i]);
      jac(i, 0) = pm;
      jac(i, 1) = m[i] > 0.0 ? theta(0) * m[i] * std::pow(theta(1), m[i] - 1.0) : 0.0;
      jac(i, 2) = 1.0;
    }
    const Eigen::Matrix3d jtj = jac.transpose() * jac;
    const Eigen::Vector3d jtr = jac.transpose() * r;

    bool stepped = false;
    for (int damp = 0; damp < 25; ++damp) {
      Eigen::Matrix3d lhs = jtj;
      lhs.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-12);
      const Eigen::Vector3d delta = lhs.ldlt().solve(-jtr);
      Eigen::Vector3d cand = theta + delta;
      cand(1) = std::clamp(cand(1), kPFloor, 1.0);
      const double cand_cost = residuals(cand, r_try);
      if (cand_cost <= cost) {
        const double step_norm = (cand - theta).norm();
        theta = cand;
        cost = cand_cost;
        r = r_try;
        lambda = std::max(lambda * 0.3, 1e-12);
        stepped = true;
        if (step_norm < kStepTol) out.converged = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!stepped || out.converged) {
      out.converged = true;
      break;
    }
  }

  out.a = theta(0);
  out.p = theta(1);
  out.b = theta(2);
  out.residual_rms = std::sqrt(cost / n);

  // Covariance estimate sigma^2 (JtJ)^-1 at the solution.
  for (int i = 0; i < n; ++i) {
    const double pm = std::pow(out.p, m[i]);
    jac(i, 0) = pm;
    jac(i, 1) = m[i] > 0.0 ? out.a * m[i] * std::pow(out.p, m[i] - 1.0) : 0.0;
    jac(i, 2) = 1.0;
  }
  const Eigen::Matrix3d jtj = jac.transpose() * jac;
  const double dof = std::max(1, n - 3);
  const double sigma2 = cost / dof;
  Eigen::Matrix3d inv = jtj.ldlt().solve(Eigen::Matrix3d::Identity());
  if (inv.allFinite()) out.covariance = sigma2 * inv;
  return out;
}

}  // namespace geomgate
