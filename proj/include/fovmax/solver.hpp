// Copyright 2026 The fovmax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Maximization of the polygon/sector intersection area over the direction.
//
// Each rotation cell is split into chunks no longer than phi. On a chunk
// starting at theta0 the objective is
//
//   f(theta0 + d) = f(theta0) + A_L(d) - A_R(d)
//
// with A_L, A_R the slivers gained at the left semi-line and lost at the
// right one. The phi-extrema of both slivers subdivide the chunk; f' is
// root-bracketed on every piece where it falls from positive to negative.

#include <functional>
#include <optional>

#include "fovmax/geometry.hpp"
#include "fovmax/partition.hpp"

namespace fovmax {

/// Target accuracy in decimal digits: |apx - opt| < 10^-digits. Must exceed 1.
class Precision {
 public:
  explicit Precision(double digits = 8.0);

  double digits() const { return digits_; }
  double tolerance() const { return tolerance_; }

 private:
  double digits_;
  double tolerance_;
};

enum class Execution { serial, parallel };

struct RootResult {
  double root = 0.0;
  double bracket = 0.0;  // final bracket width
  int iterations = 0;
};

/// Newton steps are taken while they stay inside the bracket and reduce
/// |g|; otherwise the bracket is bisected. Gives up after 200 iterations
/// and returns the bracket midpoint. Returns nullopt without a sign change.
/// Throws ErrorKind::domain if lo >= hi.
std::optional<RootResult> safeguarded_root(const std::function<double(double)>& g,
                                           const std::function<double(double)>& dg,
                                           Interval bracket, Precision prec);

struct SolveResult {
  double theta_star = 0.0;
  double area = 0.0;
  long cell_index = -1;
  long num_cells = 0;
  long candidates_evaluated = 0;
  double achieved_bracket = 0.0;
  /// theta_star is a root of f' inside a cell rather than a cell or chunk
  /// endpoint.
  bool interior = false;
  long newton_iterations = 0;
};

/// Local maximum over one cell; ties go to the smallest direction. The
/// returned theta_star is not normalized.
SolveResult maximize_cell(const ScenePartition& scene, const RotationCell& cell,
                          Precision prec);

/// Global maximum over the admissible direction domain, optionally
/// restricted to `domain`. theta_star is normalized to [0, 2pi).
/// Throws ErrorKind::unsupported if the apex is not strictly outside and
/// ErrorKind::domain if the domain misses the polygon.
SolveResult maximize_global(const ConvexPolygon& poly, Point apex, Angle phi,
                            Precision prec,
                            std::optional<Interval> domain = std::nullopt,
                            Execution exec = Execution::parallel);

SolveResult maximize_global(const ScenePartition& scene, Precision prec,
                            Execution exec = Execution::parallel);

}  // namespace fovmax
