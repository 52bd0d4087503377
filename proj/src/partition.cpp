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

#include "fovmax/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fovmax/errors.hpp"

namespace fovmax {

AngularOrder angular_order(const ConvexPolygon& poly, Point apex) {
  AngularOrder out;
  out.span = angular_span(poly, apex);
  const std::size_t n = poly.size();

  std::vector<double> rebased(n);
  for (std::size_t i = 0; i < n; ++i) {
    rebased[i] = out.span.rebase(vertex_angle(apex, poly[i]).radians());
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (rebased[a] != rebased[b]) return rebased[a] < rebased[b];
    return norm(poly[a] - apex) < norm(poly[b] - apex);
  });

  out.vertex_rank.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t v = idx[k];
    if (!out.angles.empty() && rebased[v] - out.angles.back() <= kAngleEps) {
      // Same ray: keep the vertex nearer to the apex as representative.
      const std::size_t rep = out.vertex_order.back();
      if (norm(poly[v] - apex) < norm(poly[rep] - apex)) {
        out.vertex_order.back() = v;
      }
    } else {
      out.angles.push_back(rebased[v]);
      out.vertex_order.push_back(v);
    }
    out.vertex_rank[v] = out.angles.size() - 1;
  }
  return out;
}

SectionEdges section_edges(const ConvexPolygon& poly, const AngularOrder& order) {
  const std::size_t n = poly.size();
  const std::size_t m = order.angles.size() - 1;
  const auto& rank = order.vertex_rank;
  auto next = [n](std::size_t i) { return (i + 1) % n; };
  auto prev = [n](std::size_t i) { return (i + n - 1) % n; };

  // From the first ray the counter-clockwise boundary is the far (upper)
  // chain and the clockwise one the near (lower) chain. Ranks never
  // decrease along either chain up to the last ray; a chain head advances
  // once the next vertex lies beyond the current section.
  const std::size_t start = order.vertex_order.front();
  SectionEdges out;
  out.near.resize(m);
  out.far.resize(m);

  std::size_t upper = start;
  std::size_t lower = start;
  for (std::size_t s = 0; s < m; ++s) {
    while (rank[next(upper)] <= s) upper = next(upper);
    while (rank[prev(lower)] <= s) lower = prev(lower);
    out.far[s] = upper;
    out.near[s] = prev(lower);
  }
  return out;
}

std::vector<double> breakpoints(std::span<const double> sorted_angles,
                                Angle phi, std::optional<Interval> domain) {
  const double p = phi.radians();
  if (sorted_angles.empty()) return {};
  Interval dom{sorted_angles.front() - p, sorted_angles.back()};
  if (domain) {
    dom.lo = std::max(dom.lo, domain->lo);
    dom.hi = std::min(dom.hi, domain->hi);
  }
  if (!(dom.hi > dom.lo)) return {};

  // Both sequences are increasing; a linear merge keeps the order.
  const std::size_t n = sorted_angles.size();
  std::vector<double> merged(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    merged[i] = sorted_angles[i] - p;
    merged[n + i] = sorted_angles[i];
  }
  std::inplace_merge(merged.begin(), merged.begin() + n, merged.end());

  std::vector<double> out{dom.lo};
  for (double b : merged) {
    if (b <= dom.lo || b >= dom.hi) continue;
    if (b - out.back() > kAngleEps) out.push_back(b);
  }
  if (dom.hi - out.back() > kAngleEps) {
    out.push_back(dom.hi);
  } else {
    out.back() = dom.hi;
  }
  return out;
}

namespace {

// Shifts a user domain by whole turns to overlap the admissible one most.
Interval align_domain(Interval user, Interval admissible) {
  if (user.hi - user.lo >= kTwoPi) return admissible;
  Interval best{0.0, -1.0};
  double best_overlap = -1.0;
  const double k0 = std::floor((admissible.lo - user.lo) / kTwoPi);
  for (double k = k0 - 1.0; k <= k0 + 2.0; k += 1.0) {
    const Interval cand{std::max(user.lo + k * kTwoPi, admissible.lo),
                        std::min(user.hi + k * kTwoPi, admissible.hi)};
    if (cand.width() > best_overlap) {
      best_overlap = cand.width();
      best = cand;
    }
  }
  if (!(best_overlap > 0.0)) {
    throw Error(ErrorKind::domain, "direction domain does not meet the polygon");
  }
  return best;
}

double section_area_of(const ConvexPolygon& poly, Point apex, double a0,
                       double a1, std::size_t near_edge, std::size_t far_edge) {
  const Line near = poly.edge_line(near_edge);
  const Line far = poly.edge_line(far_edge);
  const auto p0 = ray_line_intersection(apex, Angle(a0), near);
  const auto p1 = ray_line_intersection(apex, Angle(a0), far);
  const auto p2 = ray_line_intersection(apex, Angle(a1), far);
  const auto p3 = ray_line_intersection(apex, Angle(a1), near);
  if (p0 && p1 && p2 && p3) {
    const Point quad[4] = {*p0, *p1, *p2, *p3};
    const double a = std::abs(shoelace_area(quad));
    if (std::isfinite(a)) return a;
  }
  const auto clip = sector_clip(poly, Sector(apex, Angle(a0), Angle(a1 - a0)));
  return clip ? shoelace_area(*clip) : 0.0;
}

}  // namespace

ScenePartition::ScenePartition(ConvexPolygon poly, Point apex, Angle phi,
                               std::optional<Interval> domain)
    : poly_(std::move(poly)), apex_(apex), phi_(phi.radians()) {
  if (!(phi_ > 0.0 && phi_ < kPi)) {
    throw Error(ErrorKind::validation, "phi must lie in (0, pi)");
  }
  order_ = angular_order(poly_, apex_);
  edges_ = section_edges(poly_, order_);

  const std::size_t m = section_count();
  wedges_.resize(m);
  section_area_.resize(m);
  prefix_area_.assign(m + 1, 0.0);
  for (std::size_t s = 0; s < m; ++s) {
    try {
      wedges_[s] = wedge_from_lines(apex_, poly_.edge_line(edges_.far[s]),
                                    poly_.edge_line(edges_.near[s]));
    } catch (const Error&) {
      wedges_[s].reset();
    }
    section_area_[s] = section_area_of(poly_, apex_, order_.angles[s],
                                       order_.angles[s + 1], edges_.near[s],
                                       edges_.far[s]);
    prefix_area_[s + 1] = prefix_area_[s] + section_area_[s];
  }

  const Interval admissible{order_.angles.front() - phi_, order_.angles.back()};
  domain_ = domain ? align_domain(*domain, admissible) : admissible;
  breakpoints_ = fovmax::breakpoints(order_.angles, Angle(phi_), domain_);
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    const Interval iv{breakpoints_[i], breakpoints_[i + 1]};
    if (iv.width() > kAngleEps) cells_.push_back(cell_descriptor(*this, iv));
  }
}

long ScenePartition::section_of(double t) const {
  const auto& a = order_.angles;
  if (t < a.front()) return -1;
  if (t > a.back()) return static_cast<long>(section_count());
  const auto it = std::upper_bound(a.begin(), a.end(), t);
  return std::min(static_cast<long>(it - a.begin()) - 1,
                  static_cast<long>(section_count()) - 1);
}

RotationCell cell_descriptor(const ScenePartition& scene, Interval interval) {
  RotationCell cell;
  cell.interval = interval;
  const long m = static_cast<long>(scene.section_count());
  const double probe = interval.mid();
  const long right = scene.section_of(probe);
  const long left = scene.section_of(probe + scene.phi());

  if (left < 0 || right >= m) {
    cell.empty = true;
    return cell;
  }
  const auto& angles = scene.order().angles;
  if (right == left) {
    cell.left_section = cell.right_section = static_cast<std::size_t>(left);
    cell.left_wedge = cell.right_wedge = scene.wedges_[left];
    cell.left_boundary = angles[left];
    cell.right_boundary = angles[left + 1];
    cell.degenerate = !scene.wedges_[left];
    return cell;
  }
  // Sections strictly between the two moving boundaries are fully covered.
  const long first_full = std::max(right + 1, 0L);
  const long last_full = std::min(left - 1, m - 1);
  if (last_full >= first_full) {
    cell.middle_area =
        scene.prefix_area_[last_full + 1] - scene.prefix_area_[first_full];
  }
  if (left < m) {
    cell.left_section = static_cast<std::size_t>(left);
    cell.left_wedge = scene.wedges_[left];
    cell.left_boundary = angles[left];
    cell.degenerate = cell.degenerate || !scene.wedges_[left];
  }
  if (right >= 0) {
    cell.right_section = static_cast<std::size_t>(right);
    cell.right_wedge = scene.wedges_[right];
    cell.right_boundary = angles[right + 1];
    cell.degenerate = cell.degenerate || !scene.wedges_[right];
  }
  return cell;
}

namespace {

double guarded_area(const StaticWedge& w, double theta, double phi) {
  if (phi <= 0.0) return 0.0;
  if (w.min_sine(theta, phi) < kSingularGuard) {
    throw Error(ErrorKind::near_singular, "closed form is near-singular");
  }
  return w.area_raw(theta, phi);
}

}  // namespace

double cell_objective(const ScenePartition& scene, const RotationCell& cell,
                      double theta) {
  if (cell.empty) return 0.0;
  if (cell.degenerate) {
    throw Error(ErrorKind::near_singular, "cell has a degenerate wedge");
  }
  const double phi = scene.phi();
  if (cell.same_section()) {
    return guarded_area(*cell.left_wedge, theta, phi);
  }
  double f = cell.middle_area;
  if (cell.left_wedge) {
    f += guarded_area(*cell.left_wedge, cell.left_boundary,
                      theta + phi - cell.left_boundary);
  }
  if (cell.right_wedge) {
    f += guarded_area(*cell.right_wedge, theta, cell.right_boundary - theta);
  }
  return f;
}

double clip_objective(const ScenePartition& scene, double theta) {
  const auto k = sector_clip(scene.polygon(),
                             Sector(scene.apex(), Angle(theta), Angle(scene.phi())));
  return k ? shoelace_area(*k) : 0.0;
}

}  // namespace fovmax
