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

#include "fovmax/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fovmax/errors.hpp"

namespace fovmax {

namespace {

struct Best {
  double theta;
  double area;
};

// Evaluates lo + k step (k = 0, 1, ...) and hi. Strict improvement only,
// scanning upwards, so ties keep the smallest direction.
Best scan(const ConvexPolygon& poly, Point apex, Angle phi, double lo,
          double hi, double step, Execution exec) {
  const auto n = static_cast<long>(std::floor((hi - lo) / step));
  std::vector<double> thetas;
  thetas.reserve(static_cast<std::size_t>(n) + 2);
  for (long k = 0; k <= n; ++k) {
    const double t = lo + static_cast<double>(k) * step;
    if (t <= hi) thetas.push_back(t);
  }
  if (thetas.back() < hi) thetas.push_back(hi);

  std::vector<double> areas(thetas.size());
  const auto count = static_cast<long>(thetas.size());
  if (exec == Execution::serial) {
    for (long i = 0; i < count; ++i) {
      areas[i] = clip_area_at(poly, apex, Angle(thetas[i]), phi);
    }
  } else {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
      areas[i] = clip_area_at(poly, apex, Angle(thetas[i]), phi);
    }
  }
  Best best{thetas.front(), areas.front()};
  for (std::size_t i = 1; i < thetas.size(); ++i) {
    if (areas[i] > best.area) best = {thetas[i], areas[i]};
  }
  return best;
}

}  // namespace

double clip_area_at(const ConvexPolygon& poly, Point apex, Angle theta,
                    Angle phi) {
  const auto piece = sector_clip(poly, Sector(apex, theta, phi));
  return piece ? shoelace_area(*piece) : 0.0;
}

Interval admissible_domain(const ConvexPolygon& poly, Point apex, Angle phi,
                           std::optional<Interval> domain) {
  const AngularSpan span = angular_span(poly, apex);
  const Interval full{span.lo - phi.radians(), span.hi};
  if (!domain || domain->width() >= kTwoPi) return full;
  // Shift the user interval by whole turns for the largest overlap.
  Interval best{0.0, -1.0};
  const double k0 = std::floor((full.lo - domain->lo) / kTwoPi);
  for (double k = k0 - 1.0; k <= k0 + 2.0; k += 1.0) {
    const Interval c{std::max(domain->lo + k * kTwoPi, full.lo),
                     std::min(domain->hi + k * kTwoPi, full.hi)};
    if (c.width() > best.width()) best = c;
  }
  if (!(best.width() > 0.0)) {
    throw Error(ErrorKind::domain, "direction domain does not meet the polygon");
  }
  return best;
}

GridScan grid_scan_max(const ConvexPolygon& poly, Point apex, Angle phi,
                       const GridOptions& options) {
  if (!(options.step > 0.0) || options.refine_rounds < 0) {
    throw Error(ErrorKind::validation, "grid step must be positive");
  }
  const Interval dom = admissible_domain(poly, apex, phi, options.domain);
  double step = options.step;
  Best best = scan(poly, apex, phi, dom.lo, dom.hi, step, options.exec);
  for (int r = 0; r < options.refine_rounds; ++r) {
    const double lo = std::max(dom.lo, best.theta - step);
    const double hi = std::min(dom.hi, best.theta + step);
    step /= 10.0;
    const Best local = scan(poly, apex, phi, lo, hi, step, options.exec);
    if (local.area > best.area ||
        (local.area == best.area && local.theta < best.theta)) {
      best = local;
    }
  }
  GridScan out;
  out.step = options.step;
  out.refine_rounds = options.refine_rounds;
  out.best_theta = Angle(normalize_angle(best.theta));
  out.best_area = best.area;
  return out;
}

}  // namespace fovmax
