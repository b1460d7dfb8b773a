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

#include <utility>
#include <vector>

#include "gpcb/engine.hpp"

namespace gpcb {

/// Independent conjugate-normal prior N(eta, tau^2) shared by all points.
struct TscbPrior {
  double prior_mean = 0.0;      // eta
  double prior_variance = 1.0;  // tau^2, > 0
};

/// Per-point sufficient statistics: selection counts and running means.
class TscbState {
 public:
  TscbState(std::size_t domain_size, double noise_variance);

  void observe(std::size_t idx, double y);

  std::size_t count(std::size_t idx) const { return counts_[idx]; }
  double running_mean(std::size_t idx) const { return means_[idx]; }
  double noise_variance() const { return noise_variance_; }
  std::size_t domain_size() const { return counts_.size(); }

 private:
  std::vector<std::size_t> counts_;
  std::vector<double> means_;
  double noise_variance_ = 0.0;
};

/// Posterior (mean, variance) of f(x) under the independent normal model:
///   mean = (n tau^2 ybar + s^2 eta) / (n tau^2 + s^2)
///   var  = tau^2 s^2 / (n tau^2 + s^2)
std::pair<double, double> tscb_posterior(const TscbState& state,
                                         const TscbPrior& prior,
                                         std::size_t idx);

/// The uncorrelated baseline: same interval machinery and stopping rules
/// as run(), with per-point independent posteriors and per-point
/// independent Thompson draws selecting in the FTSV rate-estimation
/// pattern. problem.kernel is ignored.
RunRecord run_tscb(const ProblemSpec& problem, const TscbPrior& prior,
                   Oracle& oracle, std::uint64_t seed,
                   const RunOptions& options = {});

}  // namespace gpcb
