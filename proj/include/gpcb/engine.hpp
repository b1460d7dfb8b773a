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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpcb/confidence.hpp"
#include "gpcb/policies.hpp"
#include "gpcb/posterior.hpp"

namespace gpcb {

enum class BetaMode { Schedule, Fixed };

struct BetaModeSpec {
  BetaMode mode = BetaMode::Schedule;
  double sqrt_beta = 3.0;  // used in Fixed mode only
};

/// One classification-bandit problem instance (the oracle supplies f).
struct ProblemSpec {
  PointGrid grid;
  double h = 0.0;         // value threshold
  double w = 0.5;         // high-value rate threshold, in (0,1)
  double epsilon = 1e-8;  // margin, > 0
  double delta = 0.05;    // confidence parameter, in (0,1)
  double noise_sigma = 0.1;
  KernelSpec kernel;
  BetaModeSpec beta_mode;
};

/// Noisy point evaluator. Stateless with respect to the engine; repeated
/// queries of one point return independent noise. Implementations draw
/// from whichever stream matches their noise source.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual double query(std::size_t idx, RngStream& noise,
                       RngStream& subsample) = 0;
};

enum class Answer { Positive, Negative };
enum class StopReason { HighRate, LowRate, Exhausted };

struct StepRecord {
  std::size_t t = 0;
  std::size_t queried_index = 0;
  double observed = 0.0;
  std::size_t high_count = 0;       // |H hat| after this step's classification
  std::size_t low_count = 0;        // |L hat|
  std::size_t uncertain_count = 0;  // |U_t|
};

struct RunJitterEvent {
  std::size_t t = 0;
  double jitter = 0.0;
};

/// Full trace of one run.
struct RunRecord {
  Answer answer = Answer::Negative;
  StopReason stop_reason = StopReason::Exhausted;
  std::vector<StepRecord> steps;  // one row per query
  std::size_t total_queries = 0;
  std::uint64_t seed = 0;
  std::vector<RunJitterEvent> jitter_events;
  // Partition at the stopping classification pass.
  std::size_t final_high_count = 0;
  std::size_t final_low_count = 0;
  std::size_t final_uncertain_count = 0;
};

/// Mid-run failure (numerical, empty intersection, exhausted budget)
/// carrying the partial trace.
class RunError : public Error {
 public:
  RunError(const std::string& msg, RunRecord partial)
      : Error(msg), partial(std::move(partial)) {}
  RunRecord partial;
};

class BudgetExceededError : public RunError {
 public:
  using RunError::RunError;
};

/// Test instrumentation: invoked after each classification pass, before
/// the stopping checks take effect. selected is set when a query follows.
struct StepView {
  std::size_t t = 0;
  double beta_val = 0.0;
  const std::vector<IntervalState>& intervals;
  const Eigen::VectorXd& means;   // posterior with t-1 observations
  const Eigen::VectorXd& sigmas;
  const std::vector<std::size_t>& uncertain;  // U_t
  std::size_t high_count = 0;
  std::size_t low_count = 0;
  std::optional<std::size_t> selected;
};
using StepObserver = std::function<void(const StepView&)>;

struct RunOptions {
  std::optional<std::size_t> max_steps;  // default 50 * |D| queries
  /// Diagnostics: ignore the rate stopping rules and run the loop until
  /// U_t is empty (a full level-set pass).
  bool disable_rate_stopping = false;
  StepObserver observer;
};

/// One full GPCB[ASP] run. Throws RunError (with partial trace) on
/// numerical failure, empty intersection, or exhausted budget.
RunRecord run(const ProblemSpec& problem, const PolicySpec& policy,
              Oracle& oracle, std::uint64_t seed,
              const RunOptions& options = {});

struct BatchOutcome {
  std::uint64_t seed = 0;
  bool ok = false;
  RunRecord record;    // partial when !ok and a trace was recoverable
  std::string error;   // empty when ok
};

using OracleFactory = std::function<std::unique_ptr<Oracle>()>;

/// Independent runs, one per seed, executed on up to `parallelism`
/// threads. Output order matches seed order; per-run errors are recorded,
/// not fatal.
std::vector<BatchOutcome> run_batch(const ProblemSpec& problem,
                                    const PolicySpec& policy,
                                    const OracleFactory& oracle_factory,
                                    const std::vector<std::uint64_t>& seeds,
                                    std::size_t parallelism,
                                    const RunOptions& options = {});

}  // namespace gpcb
