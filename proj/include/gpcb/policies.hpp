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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpcb/confidence.hpp"
#include "gpcb/posterior.hpp"

namespace gpcb {

enum class PolicyBase { FCB, LSE, FTSV, STR, VAR, UCB, LCB, TS };

/// Arm selection policy. Rate estimation is defined only for FCB, LSE,
/// FTSV, STR, and VAR.
struct PolicySpec {
  PolicyBase base = PolicyBase::FCB;
  bool rate_estimation = false;
};

bool supports_rate_estimation(PolicyBase base);

/// CLI names: fcb, lse, ftsv, str, var, ucb, lcb, ts; suffix "-re" selects
/// the rate-estimation variant. Throws InvalidArgumentError on unknown
/// names or an unsupported "-re" suffix.
PolicySpec parse_policy(std::string_view name);
std::string policy_name(const PolicySpec& spec);

/// Everything a policy may look at when choosing the next query point.
/// means/sigmas hold the posterior moments (t-1 observations) for every
/// grid point; intervals is the full per-point table.
struct SelectionContext {
  const std::vector<std::size_t>& uncertain;   // U_t, ascending indices
  const std::vector<IntervalState>& intervals; // size |D|
  const PointGrid& grid;
  const GpPosterior& posterior;
  const Eigen::VectorXd& means;
  const Eigen::VectorXd& sigmas;
  double h = 0.0;
  double w = 0.0;
  std::size_t certified_high_count = 0;  // |H hat|
  std::size_t domain_size = 0;           // |D|
  double beta_val = 0.0;
  RngStream& rng;
  /// Joint posterior draw over a subset; when empty, the posterior's own
  /// sample_joint is used. Engines install a cached fast path here.
  std::function<Eigen::VectorXd(const std::vector<std::size_t>&, RngStream&)>
      joint_sampler;
};

/// Acquisition value a_t(x). ts_draw must be supplied exactly when the
/// base policy is FTSV or TS (the point's component of the shared joint
/// sample g_t).
double score(const PolicySpec& spec, const SelectionContext& ctx,
             std::size_t idx, std::optional<double> ts_draw = std::nullopt);

/// Next query point: argmax of the score over U_t, or the rate-estimation
/// case rule when enabled. Ties break toward the lowest point index.
/// Always returns a member of ctx.uncertain.
std::size_t select(const PolicySpec& spec, const SelectionContext& ctx);

}  // namespace gpcb
