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

#include <cstddef>
#include <limits>

namespace gpcb {

enum class Label { High, Low, Uncertain };

/// Per-point running confidence interval and partition label. The interval
/// starts at (-inf, +inf) and only ever shrinks; once a label leaves
/// Uncertain it is final.
struct IntervalState {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  Label label = Label::Uncertain;
};

struct BetaSchedule {
  std::size_t domain_size = 0;  // |D|
  double delta = 0.05;          // confidence parameter, in (0,1)
};

/// beta_t = 2 ln(|D| pi^2 t^2 / (6 delta)), strictly increasing in t >= 1.
double beta(const BetaSchedule& sched, std::size_t t);

/// Intersect the running interval with [mu - sqrt(beta)*sigma,
/// mu + sqrt(beta)*sigma]. The result never widens. An empty intersection
/// throws EmptyIntersectionError; the caller aborts the run with context.
IntervalState intersect_update(const IntervalState& iv, double mu,
                               double sigma, double beta_val);

/// High if lower >= h - epsilon; else Low if upper < h + epsilon; else
/// Uncertain. High is checked first and wins when both tests pass.
Label classify(const IntervalState& iv, double h, double epsilon);

}  // namespace gpcb
