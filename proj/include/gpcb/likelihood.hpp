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

#include <span>
#include <vector>

#include "gpcb/posterior.hpp"

namespace gpcb {

/// GP evidence: -1/2 y^T (K + s^2 I)^{-1} y - 1/2 log det(K + s^2 I)
///              - (t/2) log 2*pi.
double log_marginal_likelihood(const KernelSpec& spec, double noise_variance,
                               const PointGrid& grid,
                               std::span<const Observation> observations);

struct KernelCandidate {
  double signal_variance = 1.0;
  double length_scale = 1.0;
};

/// Exhaustive evidence maximization over the candidate grid. Requires at
/// least 10 observations. Ties break toward the smallest length scale,
/// then the smallest signal variance. Candidates that fail numerically are
/// skipped; if all fail, throws NumericalError.
KernelSpec tune_kernel(const PointGrid& grid,
                       std::span<const Observation> observations,
                       double noise_variance,
                       std::span<const KernelCandidate> candidates,
                       KernelKind kind = KernelKind::SquaredExponential);

/// Default log-spaced search grid: signal_variance in [0.1, 10],
/// length_scale in [0.05 * domain width, domain width], per_axis points each.
std::vector<KernelCandidate> default_tuning_grid(const PointGrid& grid,
                                                 std::size_t per_axis = 20);

}  // namespace gpcb
