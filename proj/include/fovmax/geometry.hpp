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

// Planar primitives: points, angles, convex polygons, sectors, lines,
// half-plane clipping and the polygon/sector intersection classification.
//
// Sectors and half-planes are closed sets throughout. Lines are stored as
// (point, unit direction) so vertical lines need no special casing.

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace fovmax {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute tolerance on cross products used by orientation tests.
inline constexpr double kOrientEps = 1e-12;
/// Rays from the apex closer than this (radians) are treated as one ray.
inline constexpr double kAngleEps = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point() = default;
  Point(double x_, double y_);

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

/// Maps any real angle to [0, 2pi).
double normalize_angle(double radians);

/// Counter-clockwise offset from `from` to `to`, in [0, 2pi).
inline double ccw_offset(double from, double to) {
  return normalize_angle(to - from);
}

/// An angle in radians. Arithmetic is unnormalized; call normalized()
/// to get the [0, 2pi) representative.
class Angle {
 public:
  constexpr Angle() = default;
  constexpr explicit Angle(double radians) : radians_(radians) {}

  constexpr double radians() const { return radians_; }
  double normalized() const { return normalize_angle(radians_); }

  friend constexpr Angle operator+(Angle a, Angle b) {
    return Angle(a.radians_ + b.radians_);
  }
  friend constexpr Angle operator-(Angle a, Angle b) {
    return Angle(a.radians_ - b.radians_);
  }
  friend constexpr Angle operator-(Angle a) { return Angle(-a.radians_); }
  friend constexpr auto operator<=>(const Angle&, const Angle&) = default;

 private:
  double radians_ = 0.0;
};

inline Point unit_vector(Angle a) {
  return {std::cos(a.radians()), std::sin(a.radians())};
}

/// Infinite line through `point` with unit direction `direction`.
struct Line {
  Point point;
  Point direction;

  static Line from_slope(Point p, Angle slope);
  static Line through(Point a, Point b);

  /// Slope angle of the line, in (-pi/2, pi/2].
  Angle slope_angle() const;
  /// Signed distance of p from the line, positive on the left.
  double side(Point p) const { return cross(direction, p - point); }
};

/// Convex polygon with counter-clockwise vertices. Construction rejects
/// clockwise, non-convex, degenerate or duplicate-vertex input.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices);

  /// Wraps vertices that are known to satisfy the invariants up to
  /// rounding, e.g. the output of a convex clip. No validation.
  static ConvexPolygon assume_valid(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const Point& vertex(std::size_t i) const {
    return vertices_[i % vertices_.size()];
  }
  /// Edge i runs from vertex i to vertex i+1 (cyclic).
  Line edge_line(std::size_t i) const {
    return Line::through(vertex(i), vertex(i + 1));
  }

  /// True iff p lies strictly outside the closed polygon.
  bool strictly_outside(Point p) const;

 private:
  struct Unchecked {};
  ConvexPolygon(std::vector<Point> vertices, Unchecked)
      : vertices_(std::move(vertices)) {}

  std::vector<Point> vertices_;
};

/// Planar sector S(apex, direction, opening): the closed region between the
/// right semi-line at `direction` and the left one at direction + opening.
struct Sector {
  Point apex;
  Angle direction;
  Angle opening;

  Sector(Point apex_, Angle direction_, Angle opening_);

  Angle left_direction() const { return direction + opening; }
};

enum class IntersectionKind {
  contains,
  fully_intersects,
  partially_intersects,
  no_intersection,
};

const char* to_string(IntersectionKind kind);

/// Angular extent of a polygon seen from an outside apex. `lo` is in
/// [0, 2pi); `hi` = lo + span may exceed 2pi.
struct AngularSpan {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  /// Re-bases an arbitrary direction to [lo - tol, lo + 2pi - tol).
  double rebase(double theta, double tol = kAngleEps) const;
};

double shoelace_area(std::span<const Point> pts);
double shoelace_area(const ConvexPolygon& poly);

/// Direction of the ray apex -> p in [0, 2pi).
Angle vertex_angle(Point apex, Point p);

std::optional<Point> ray_line_intersection(Point apex, Angle dir,
                                           const Line& line);

std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly,
                                            const Line& line, bool keep_left);

/// P intersect S for an opening below pi, as two half-plane clips.
std::optional<ConvexPolygon> sector_clip(const ConvexPolygon& poly,
                                         const Sector& s);

/// Throws ErrorKind::unsupported if the apex is not strictly outside.
AngularSpan angular_span(const ConvexPolygon& poly, Point apex);

IntersectionKind classify(const ConvexPolygon& poly, const Sector& s);

}  // namespace fovmax
