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
#include <span>
#include <vector>

namespace gpcb {

/// A finite ordered query set D of points in R^d. Points are unique;
/// indexing is stable for the lifetime of the grid.
class PointGrid {
 public:
  /// coords is row-major: point i occupies coords[i*dim .. i*dim+dim).
  PointGrid(std::size_t dim, std::vector<double> coords);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return size_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }

  /// Largest per-coordinate extent; used to scale default length-scale grids.
  double domain_width() const;

 private:
  std::size_t dim_ = 0;
  std::size_t size_ = 0;
  std::vector<double> coords_;
};

/// The (n+1)^2 square lattice {(a+ib/n, a+jb/n) | i,j = 0..n}, ordered
/// row-major in i (index = i*(n+1)+j).
PointGrid make_grid(double a, double b, int n);

}  // namespace gpcb
