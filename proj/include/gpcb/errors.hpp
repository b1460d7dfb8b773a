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
#include <stdexcept>
#include <string>

namespace gpcb {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition (bad index, dimension mismatch, invalid parameter).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Linear-algebra breakdown that survived the jitter escalation.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& msg, double failing_pivot)
      : Error(msg), failing_pivot(failing_pivot) {}
  double failing_pivot = 0.0;
};

/// A confidence-interval intersection came out empty. This falsifies the
/// coverage premise the algorithm's correctness rests on, so the run aborts.
class EmptyIntersectionError : public Error {
 public:
  EmptyIntersectionError(const std::string& msg, double lower, double upper)
      : Error(msg), lower(lower), upper(upper) {}
  double lower = 0.0;
  double upper = 0.0;
};

/// Malformed dataset file. Locations are 1-based.
class IngestError : public Error {
 public:
  IngestError(const std::string& msg, std::size_t row, std::size_t col)
      : Error(msg), row(row), col(col) {}
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Invalid experiment configuration; line is 1-based, 0 when not line-specific.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& msg, std::size_t line = 0)
      : Error(msg), line(line) {}
  std::size_t line = 0;
};

}  // namespace gpcb
