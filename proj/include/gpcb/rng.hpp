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
#include <random>

namespace gpcb {

/// splitmix64 step; used to derive well-separated substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// A seeded random stream. Distributions are constructed per call so the
/// stream state is exactly the underlying engine state (no hidden caches);
/// identical seeds give identical draw sequences on a given platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  double normal() {
    std::normal_distribution<double> dist(0.0, 1.0);
    return dist(engine_);
  }

  double normal(double mean, double stddev) {
    return mean + stddev * normal();
  }

  double uniform() {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    return dist(engine_);
  }

  /// Uniform index in {0, ..., n-1}; n must be positive.
  std::size_t uniform_index(std::size_t n) {
    std::uniform_int_distribution<std::size_t> dist(0, n - 1);
    return dist(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Independent substreams split from one master seed.
enum class StreamKind : std::uint64_t {
  ObservationNoise = 0,
  PolicySampling = 1,
  OracleSubsample = 2,
};

/// Counter-based split: each (seed, kind) pair maps to its own stream, so
/// policy comparisons can share the observation-noise realization.
inline RngStream derive_stream(std::uint64_t master_seed, StreamKind kind) {
  std::uint64_t state = master_seed;
  std::uint64_t base = splitmix64(state);
  state = base + static_cast<std::uint64_t>(kind);
  return RngStream(splitmix64(state));
}

}  // namespace gpcb
