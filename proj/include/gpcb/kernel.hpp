/*
 * Copyright 2026 The gpcb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "gpcb/grid.hpp"

namespace gpcb {

enum class KernelKind { Linear, SquaredExponential };

/// Covariance function parameters. SquaredExponential:
///   k(x,x') = signal_variance * exp(-||x-x'||^2 / (2 * length_scale^2)).
/// Linear is the plain dot product x^T x'; both parameters are ignored.
struct KernelSpec {
  KernelKind kind = KernelKind::SquaredExponential;
  double signal_variance = 1.0;
  double length_scale = 1.0;
};

double kernel_eval(const KernelSpec& spec, std::span<const double> x,
                   std::span<const double> x2);

/// Gram matrix over all grid points.
Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const PointGrid& grid);

/// Gram matrix over a subset of grid points (in the given order).
Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const PointGrid& grid,
                            std::span<const std::size_t> subset);

}  // namespace gpcb
