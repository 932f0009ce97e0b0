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
#include <vector>

namespace geomgate {

struct ExpFitResult {
  double a = 0.5;
  double p = 0.99;
  double b = 0.5;
  double residual_rms = 0.0;
  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();
  int iterations = 0;
  bool converged = false;

  double eval(double m) const;
};

// Damped (Levenberg-style) least squares for f(m) = a * p^m + b with the
// decay base constrained to (0, 1]. Initialization a = b = 0.5, p = 0.99.
ExpFitResult fit_exponential_decay(const std::vector<double>& m, const std::vector<double>& f);

}  // namespace geomgate
