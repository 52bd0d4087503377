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

// Scene generators and independent reference computations for the tests.
// Nothing here calls the library's closed-form or partition code.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fovmax/analytic.hpp"
#include "fovmax/errors.hpp"
#include "fovmax/geometry.hpp"

namespace fovmax::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Plain shoelace over an explicit point list (signed, CCW positive).
inline double shoelace(const std::vector<Point>& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % p.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return 0.5 * s;
}

/// Intersection of the ray apex + t (cos a, sin a), t > 0, with the line
/// y = m x + c. Used to rebuild quadrilaterals by hand.
inline Point ray_hits_line(Point apex, double a, double m, double c) {
  const double dx = std::cos(a), dy = std::sin(a);
  const double t = (m * apex.x + c - apex.y) / (dy - m * dx);
  return {apex.x + t * dx, apex.y + t * dy};
}

/// n vertices on a randomly stretched and sheared ellipse, angles at
/// least `gap` apart, centred at `c`. Always strictly convex.
inline std::vector<Point> random_convex_points(Rng& rng, int n, Point c,
                                               double radius) {
  std::vector<double> t;
  const double gap = 0.2 / n;
  while (static_cast<int>(t.size()) < n) {
    const double a = uniform(rng, 0.0, kTwoPi);
    bool ok = true;
    for (double b : t) {
      const double d = std::abs(a - b);
      if (std::min(d, kTwoPi - d) < gap) ok = false;
    }
    if (ok) t.push_back(a);
  }
  std::sort(t.begin(), t.end());
  const double sx = radius * uniform(rng, 0.4, 1.0);
  const double sy = radius * uniform(rng, 0.4, 1.0);
  const double shear = uniform(rng, -0.5, 0.5);
  const double rot = uniform(rng, 0.0, kTwoPi);
  std::vector<Point> out;
  for (double a : t) {
    const double x = sx * std::cos(a) + shear * sy * std::sin(a);
    const double y = sy * std::sin(a);
    out.push_back({c.x + x * std::cos(rot) - y * std::sin(rot),
                   c.y + x * std::sin(rot) + y * std::cos(rot)});
  }
  return out;
}

inline ConvexPolygon random_convex(Rng& rng, int n) {
  const Point c{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)};
  return ConvexPolygon(random_convex_points(rng, n, c, uniform(rng, 0.5, 4.0)));
}

/// A point well outside the polygon, 1.1 to 4 circumradii from its
/// centroid.
inline Point random_outside_apex(Rng& rng, const ConvexPolygon& poly) {
  Point c{0.0, 0.0};
  for (const Point& p : poly.vertices()) c = c + (1.0 / poly.size()) * p;
  double r = 0.0;
  for (const Point& p : poly.vertices()) r = std::max(r, norm(p - c));
  const double a = uniform(rng, 0.0, kTwoPi);
  const double d = r * uniform(rng, 1.1, 4.0);
  return {c.x + d * std::cos(a), c.y + d * std::sin(a)};
}

/// Do the closed segment [p, q] and the ray apex + t u (t >= 0) meet?
inline bool ray_hits_segment(Point apex, double dir, Point p, Point q) {
  const Point u{std::cos(dir), std::sin(dir)};
  const Point e = q - p;
  const double den = cross(u, e);
  if (std::abs(den) < 1e-15) return false;
  const Point w = p - apex;
  const double t = cross(w, e) / den;
  const double s = cross(w, u) / den;
  return t >= -1e-12 && s >= -1e-12 && s <= 1.0 + 1e-12;
}

inline bool ray_hits_polygon(Point apex, double dir, const ConvexPolygon& poly) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (ray_hits_segment(apex, dir, poly.vertex(i), poly.vertex(i + 1))) {
      return true;
    }
  }
  return false;
}

inline double angular_distance(double a, double b) {
  const double d = std::abs(normalize_angle(a) - normalize_angle(b));
  return std::min(d, kTwoPi - d);
}

/// Hit of the half-line apex + t u(dir) with an infinite line, by hand.
inline Point ray_hit(Point apex, double dir, const Line& l) {
  const Point u{std::cos(dir), std::sin(dir)};
  const double t = cross(l.point - apex, l.direction) / cross(u, l.direction);
  return apex + t * u;
}

/// |shoelace| of P1 P2 P3 P4: right ray on near/far, left ray on far/near.
inline double quad_area(Point apex, double theta, double phi, const Line& far,
                        const Line& near) {
  return std::abs(shoelace({ray_hit(apex, theta, near), ray_hit(apex, theta, far),
                            ray_hit(apex, theta + phi, far),
                            ray_hit(apex, theta + phi, near)}));
}

struct WedgeCase {
  Point apex;
  Line far;
  Line near;
  StaticWedge wedge;
  double theta;  // full-intersection direction
  double phi;
};

/// Random two-line configuration seen from a random apex, with a sector
/// (theta, phi) well inside the full-intersection window: both semi-lines
/// cross the near line and then the far line, at least `margin` radians
/// from the window ends.
inline WedgeCase random_wedge_case(Rng& rng, double margin = 0.05) {
  for (;;) {
    const Point apex{uniform(rng, -5, 5), uniform(rng, -5, 5)};
    const double u0 = uniform(rng, 0, kTwoPi);
    const double r1 = uniform(rng, 0.3, 4.0);
    const double r2 = r1 + uniform(rng, 0.2, 6.0);
    const Point u{std::cos(u0), std::sin(u0)};
    const Line near = Line::from_slope(apex + r1 * u, Angle(u0 + uniform(rng, 0.4, kPi - 0.4)));
    const Line far = Line::from_slope(apex + r2 * u, Angle(u0 + uniform(rng, 0.4, kPi - 0.4)));
    StaticWedge w;
    try {
      w = wedge_from_lines(apex, far, near);
    } catch (const Error&) {
      continue;
    }
    const double lo = w.theta_min() + margin;
    const double hi = w.theta_max() - margin;
    if (hi - lo < 0.05) continue;
    const double theta = uniform(rng, lo, hi - 0.02);
    const double phi = uniform(rng, 0.01, hi - theta);
    return {apex, far, near, w, theta, phi};
  }
}

}  // namespace fovmax::testing
