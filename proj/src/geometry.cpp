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

#include "fovmax/geometry.hpp"

#include <algorithm>
#include <string>

#include "fovmax/errors.hpp"

namespace fovmax {

Point::Point(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x_) || !std::isfinite(y_)) {
    throw Error(ErrorKind::validation, "point coordinates must be finite");
  }
}

double normalize_angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Line Line::from_slope(Point p, Angle slope) {
  return Line{p, unit_vector(slope)};
}

Line Line::through(Point a, Point b) {
  const Point d = b - a;
  const double len = norm(d);
  if (len == 0.0) {
    throw Error(ErrorKind::degenerate, "line through coincident points");
  }
  return Line{a, (1.0 / len) * d};
}

Angle Line::slope_angle() const {
  double a = std::atan2(direction.y, direction.x);
  if (a <= -kPi / 2) a += kPi;
  if (a > kPi / 2) a -= kPi;
  return Angle(a);
}

namespace {

std::string vertex_label(std::size_t i) { return "vertex " + std::to_string(i); }

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw Error(ErrorKind::validation, "polygon has fewer than 3 vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i] == vertices_[(i + 1) % n]) {
      throw Error(ErrorKind::validation,
                  "polygon has duplicate consecutive vertices at " +
                      vertex_label(i));
    }
  }
  const double area = shoelace_area(std::span<const Point>(vertices_));
  if (std::abs(area) <= kOrientEps) {
    throw Error(ErrorKind::validation, "polygon has zero area");
  }
  if (area < 0.0) {
    throw Error(ErrorKind::validation, "polygon not counter-clockwise");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    const Point& c = vertices_[(i + 2) % n];
    if (cross(b - a, c - b) < -kOrientEps) {
      throw Error(ErrorKind::validation,
                  "polygon not convex at " + vertex_label((i + 1) % n));
    }
  }
  // A star-shaped winding can pass the local test; total turning must be 2pi.
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point u = vertices_[(i + 1) % n] - vertices_[i];
    const Point v = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
    turning += std::atan2(cross(u, v), dot(u, v));
  }
  if (std::abs(turning - kTwoPi) > 1e-6) {
    throw Error(ErrorKind::validation, "polygon not convex (self-overlapping)");
  }
}

ConvexPolygon ConvexPolygon::assume_valid(std::vector<Point> vertices) {
  return ConvexPolygon(std::move(vertices), Unchecked{});
}

bool ConvexPolygon::strictly_outside(Point p) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    if (cross(b - a, p - a) < -kOrientEps) return true;
  }
  return false;
}

Sector::Sector(Point apex_, Angle direction_, Angle opening_)
    : apex(apex_), direction(direction_), opening(opening_) {
  if (!(opening_.radians() > 0.0 && opening_.radians() < kPi)) {
    throw Error(ErrorKind::validation, "phi must lie in (0, pi)");
  }
}

const char* to_string(IntersectionKind kind) {
  switch (kind) {
    case IntersectionKind::contains: return "contains";
    case IntersectionKind::fully_intersects: return "fully_intersects";
    case IntersectionKind::partially_intersects: return "partially_intersects";
    case IntersectionKind::no_intersection: return "no_intersection";
  }
  return "?";
}

double AngularSpan::rebase(double theta, double tol) const {
  double off = ccw_offset(lo, theta);
  if (off >= kTwoPi - tol) off -= kTwoPi;
  return lo + off;
}

double shoelace_area(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    twice += cross(pts[i], pts[(i + 1) % n]);
  }
  return 0.5 * twice;
}

double shoelace_area(const ConvexPolygon& poly) {
  return shoelace_area(poly.vertices());
}

Angle vertex_angle(Point apex, Point p) {
  if (apex == p) {
    throw Error(ErrorKind::degenerate, "vertex coincides with apex");
  }
  return Angle(normalize_angle(std::atan2(p.y - apex.y, p.x - apex.x)));
}

std::optional<Point> ray_line_intersection(Point apex, Angle dir,
                                           const Line& line) {
  if (std::abs(line.side(apex)) <= kOrientEps) return apex;
  const Point u = unit_vector(dir);
  const double denom = cross(u, line.direction);
  if (std::abs(denom) <= kOrientEps) return std::nullopt;
  const double t = cross(line.point - apex, line.direction) / denom;
  if (!(t > 0.0)) return std::nullopt;
  return apex + t * u;
}

std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly,
                                            const Line& line, bool keep_left) {
  const auto pts = poly.vertices();
  const std::size_t n = pts.size();
  const double sign = keep_left ? 1.0 : -1.0;

  std::vector<double> dist(n);
  bool all_in = true;
  for (std::size_t i = 0; i < n; ++i) {
    dist[i] = sign * line.side(pts[i]);
    if (dist[i] < -kOrientEps) all_in = false;
  }
  if (all_in) return poly;

  std::vector<Point> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const double di = dist[i];
    const double dj = dist[j];
    if (di >= -kOrientEps) out.push_back(pts[i]);
    if ((di > kOrientEps && dj < -kOrientEps) ||
        (di < -kOrientEps && dj > kOrientEps)) {
      const double t = di / (di - dj);
      out.push_back(pts[i] + t * (pts[j] - pts[i]));
    }
  }

  // Drop consecutive repeats produced by vertices lying on the line.
  std::vector<Point> clean;
  clean.reserve(out.size());
  for (const Point& p : out) {
    if (clean.empty() || norm(p - clean.back()) > 1e-14 * (1.0 + norm(p))) {
      clean.push_back(p);
    }
  }
  while (clean.size() > 1 &&
         norm(clean.front() - clean.back()) <= 1e-14 * (1.0 + norm(clean.front()))) {
    clean.pop_back();
  }
  if (clean.size() < 3) return std::nullopt;
  if (!(shoelace_area(std::span<const Point>(clean)) > 0.0)) return std::nullopt;
  return ConvexPolygon::assume_valid(std::move(clean));
}

std::optional<ConvexPolygon> sector_clip(const ConvexPolygon& poly,
                                         const Sector& s) {
  const Line right = Line::from_slope(s.apex, s.direction);
  const Line left = Line::from_slope(s.apex, s.left_direction());
  auto half = clip_halfplane(poly, right, /*keep_left=*/true);
  if (!half) return std::nullopt;
  return clip_halfplane(*half, left, /*keep_left=*/false);
}

AngularSpan angular_span(const ConvexPolygon& poly, Point apex) {
  if (!poly.strictly_outside(apex)) {
    throw Error(ErrorKind::unsupported, "apex inside or on polygon");
  }
  std::vector<double> a;
  a.reserve(poly.size());
  for (const Point& p : poly.vertices()) {
    a.push_back(vertex_angle(apex, p).radians());
  }
  std::sort(a.begin(), a.end());
  // The vertices occupy an arc shorter than pi; the complement is the
  // largest gap between consecutive directions.
  double best_gap = a.front() + kTwoPi - a.back();
  std::size_t start = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const double gap = a[i] - a[i - 1];
    if (gap > best_gap) {
      best_gap = gap;
      start = i;
    }
  }
  return AngularSpan{a[start], a[start] + (kTwoPi - best_gap)};
}

IntersectionKind classify(const ConvexPolygon& poly, const Sector& s) {
  const AngularSpan span = angular_span(poly, s.apex);
  const double phi = s.opening.radians();

  auto hits = [&](double dir) {
    const double t = span.rebase(dir);
    return t >= span.lo - kAngleEps && t <= span.hi + kAngleEps;
  };

  // Offset from the right semi-line to the first vertex ray.
  double to_lo = ccw_offset(s.direction.radians(), span.lo);
  if (to_lo >= kTwoPi - kAngleEps) to_lo = 0.0;
  if (to_lo + span.width() <= phi + kAngleEps) {
    return IntersectionKind::contains;
  }
  const bool right = hits(s.direction.radians());
  const bool left = hits(s.left_direction().radians());
  if (right && left) return IntersectionKind::fully_intersects;
  if (right || left) return IntersectionKind::partially_intersects;
  return IntersectionKind::no_intersection;
}

}  // namespace fovmax
