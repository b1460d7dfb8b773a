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
#include <cstdint>
#include <vector>

#include "gpcb/grid.hpp"
#include "gpcb/kernel.hpp"
#include "gpcb/rng.hpp"

namespace gpcb {

struct Observation {
  std::size_t index = 0;  // grid point index
  double value = 0.0;     // noisy observed y
};

/// Diagonal jitter applied while extending the factor or sampling.
struct JitterEvent {
  std::size_t at_count = 0;  // number of observations when it happened
  double jitter = 0.0;
};

/// What condition() appends to the triangular factor; consumed by
/// incremental per-point trackers.
struct ConditionInfo {
  Eigen::VectorXd cross;    // r with L r = k_vec(previous queries, new point)
  double pivot = 0.0;       // new diagonal entry d
  double jitter_used = 0.0; // 0 when the pivot needed no repair
};

/// Jitter escalation schedule for positive-definiteness repair.
inline constexpr double kJitterStart = 1e-10;
inline constexpr double kJitterCeiling = 1e-4;
inline constexpr double kJitterGrowth = 10.0;

/// Draw from N(mean, cov). cov is destroyed. PSD is enforced by additive
/// diagonal jitter on the escalation schedule; exceeding the ceiling throws
/// NumericalError. Records applied jitter in *jitter_out when non-null.
Eigen::VectorXd sample_mvn(const Eigen::VectorXd& mean, Eigen::MatrixXd cov,
                           RngStream& rng, double* jitter_out = nullptr);

/// Exact GP posterior over a finite grid, conditioned incrementally.
/// Holds the ordered observations, the lower-triangular factor L of
/// (K_t + noise_variance * I), and the solved weights (K_t + s^2 I)^{-1} y.
/// Value semantics: copy/move freely; mutation is single-writer.
class GpPosterior {
 public:
  GpPosterior(KernelSpec kernel, double noise_variance);

  const KernelSpec& kernel() const { return kernel_; }
  double noise_variance() const { return noise_variance_; }
  std::size_t count() const { return queried_.size(); }
  const std::vector<Observation>& queried() const { return queried_; }

  /// Append one observation, extending the factor by one row (rank-1
  /// growth). Throws NumericalError if the new pivot cannot be repaired
  /// within the jitter schedule.
  ConditionInfo condition(const PointGrid& grid, std::size_t idx, double y);

  double mean(const PointGrid& grid, std::size_t idx) const;

  /// Posterior variance; negative values within 1e-12 of zero are clamped,
  /// anything lower throws NumericalError.
  double variance(const PointGrid& grid, std::size_t idx) const;

  double covariance(const PointGrid& grid, std::size_t i, std::size_t j) const;

  /// One joint draw over the subset from the posterior.
  Eigen::VectorXd sample_joint(const PointGrid& grid,
                               const std::vector<std::size_t>& subset,
                               RngStream& rng) const;

  /// Lower-triangular factor restricted to the first count() rows/cols.
  const Eigen::MatrixXd& factor_storage() const { return factor_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  const std::vector<JitterEvent>& jitter_events() const { return jitter_events_; }

 private:
  // k_t(x): prior kernel between every queried point and grid point idx.
  Eigen::VectorXd kernel_vector(const PointGrid& grid, std::size_t idx) const;

  KernelSpec kernel_;
  double noise_variance_ = 0.0;
  std::vector<Observation> queried_;
  Eigen::MatrixXd factor_;   // grows by whole-block reallocation, chunked
  Eigen::VectorXd y_;
  Eigen::VectorXd weights_;  // (K_t + s^2 I)^{-1} y_t
  std::vector<JitterEvent> jitter_events_;
};

}  // namespace gpcb
