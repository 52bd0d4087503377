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

// Brute-force reference built only on half-plane clipping and the shoelace
// formula. Nothing here touches the closed-form area code.

#include <optional>

#include "fovmax/geometry.hpp"
#include "fovmax/solver.hpp"

namespace fovmax {

/// Area of P intersect S(apex, theta, phi); 0 when empty.
double clip_area_at(const ConvexPolygon& poly, Point apex, Angle theta,
                    Angle phi);

struct GridScan {
  double step = 1e-4;
  int refine_rounds = 3;
  Angle best_theta{0.0};
  double best_area = 0.0;
};

struct GridOptions {
  double step = 1e-4;
  int refine_rounds = 3;
  std::optional<Interval> domain;
  Execution exec = Execution::parallel;
};

/// Dense grid lo, lo + step, lo + 2 step, ... plus the domain end over the
/// admissible directions, then refine_rounds rounds of 10x finer grids
/// around the incumbent. Ties keep the smallest direction. best_theta is
/// normalized to [0, 2pi).
GridScan grid_scan_max(const ConvexPolygon& poly, Point apex, Angle phi,
                       const GridOptions& options = {});

/// Admissible directions [a_0 - phi, a_m] with a_0, a_m the extreme vertex
/// rays, intersected with `domain` when given.
Interval admissible_domain(const ConvexPolygon& poly, Point apex, Angle phi,
                           std::optional<Interval> domain = std::nullopt);

}  // namespace fovmax
