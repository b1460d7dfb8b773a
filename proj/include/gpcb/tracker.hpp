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
#include <vector>

#include "gpcb/posterior.hpp"

namespace gpcb {

/// Posterior mean/variance maintained for every grid point at once,
/// updated in O(|D| * t) per observation from the factor row returned by
/// GpPosterior::condition. Values match the per-point queries on the
/// wrapped posterior to floating-point accuracy.
class PosteriorTable {
 public:
  PosteriorTable(KernelSpec kernel, double noise_variance,
                 const PointGrid& grid);

  /// Condition on one observation and refresh all per-point moments.
  void observe(std::size_t idx, double y);

  std::size_t count() const { return posterior_.count(); }
  const GpPosterior& posterior() const { return posterior_; }
  const PointGrid& grid() const { return *grid_; }

  double mean(std::size_t idx) const { return means_(static_cast<Eigen::Index>(idx)); }
  double variance(std::size_t idx) const { return vars_(static_cast<Eigen::Index>(idx)); }
  const Eigen::VectorXd& means() const { return means_; }
  const Eigen::VectorXd& variances() const { return vars_; }

  /// Joint posterior draw over a subset, using the cached solve vectors.
  /// Same distribution and jitter schedule as GpPosterior::sample_joint.
  Eigen::VectorXd sample_joint(const std::vector<std::size_t>& subset,
                               RngStream& rng,
                               double* jitter_out = nullptr) const;

 private:
  void grow(std::size_t needed);

  const PointGrid* grid_ = nullptr;
  GpPosterior posterior_;
  Eigen::MatrixXd kcols_;      // |D| x cap, column t: k(x_t, .)
  Eigen::MatrixXd vrows_;      // |D| x cap, row x: (L^{-1} k_t(x))^T
  Eigen::VectorXd prior_diag_; // k(x, x)
  Eigen::VectorXd sqnorm_;     // ||L^{-1} k_t(x)||^2
  Eigen::VectorXd means_;
  Eigen::VectorXd vars_;
  std::size_t cap_ = 0;
};

}  // namespace gpcb
