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

#include "fovmax/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "fovmax/errors.hpp"

namespace fovmax {

namespace {

// Wraps a line direction to a slope angle in (-pi/2, pi/2].
double wrap_slope(double a) {
  a = std::fmod(a, kPi);
  if (a <= -kPi / 2) a += kPi;
  if (a > kPi / 2) a -= kPi;
  return a;
}

Point to_local(Point p, double rho) {
  const double c = std::cos(rho);
  const double s = std::sin(rho);
  return {c * p.x + s * p.y, -s * p.x + c * p.y};
}

double vertical_offset(Point apex_local, Point line_point_local, double slope) {
  return std::tan(slope) * (apex_local.x - line_point_local.x) +
         line_point_local.y - apex_local.y;
}

// Distance along the ray at direction t from the apex to the line;
// negative when the line is behind the apex, infinite when parallel.
double ray_distance(Point apex, const Line& line, double t) {
  const double s = line.side(apex);
  const double c = cross(line.direction, unit_vector(Angle(t)));
  return -s / c;
}

// Start of the arc of directions whose rays hit the line in front of the apex.
double forward_arc_start(Point apex, const Line& line) {
  const double g = std::atan2(line.direction.y, line.direction.x);
  return line.side(apex) > 0.0 ? g + kPi : g;
}

}  // namespace

double StaticWedge::rebase(double theta) const {
  double off = ccw_offset(theta_min_, theta);
  if (off >= kTwoPi - kWindowTol) off -= kTwoPi;
  return theta_min_ + off;
}

double StaticWedge::area_raw(double theta, double phi) const {
  const double t = theta - frame_;
  const double s = std::sin(phi);
  const double co = std::cos(omega_);
  const double cb = std::cos(beta_);
  const double a1 = d_omega_ * d_omega_ * s * co * co /
                    (2.0 * std::sin(t + phi - omega_) * std::sin(t - omega_));
  const double a2 = d_beta_ * d_beta_ * s * cb * cb /
                    (2.0 * std::sin(t + phi - beta_) * std::sin(t - beta_));
  return apex_side_ * (a1 - a2);
}

double StaticWedge::density_raw(double left_direction) const {
  const double u = left_direction - frame_;
  const double co = std::cos(omega_);
  const double cb = std::cos(beta_);
  const double s1 = std::sin(u - omega_);
  const double s2 = std::sin(u - beta_);
  const double c1 = 0.5 * d_omega_ * d_omega_ * co * co;
  const double c2 = 0.5 * d_beta_ * d_beta_ * cb * cb;
  return apex_side_ * (c1 / (s1 * s1) - c2 / (s2 * s2));
}

double StaticWedge::density_slope_raw(double left_direction) const {
  const double u = left_direction - frame_;
  const double co = std::cos(omega_);
  const double cb = std::cos(beta_);
  const double x1 = u - omega_;
  const double x2 = u - beta_;
  const double s1 = std::sin(x1);
  const double s2 = std::sin(x2);
  const double c1 = 0.5 * d_omega_ * d_omega_ * co * co;
  const double c2 = 0.5 * d_beta_ * d_beta_ * cb * cb;
  return apex_side_ * (-2.0 * c1 * std::cos(x1) / (s1 * s1 * s1) +
                       2.0 * c2 * std::cos(x2) / (s2 * s2 * s2));
}

double StaticWedge::min_sine(double theta, double phi) const {
  const double t = theta - frame_;
  return std::min({std::abs(std::sin(t - omega_)),
                   std::abs(std::sin(t + phi - omega_)),
                   std::abs(std::sin(t - beta_)),
                   std::abs(std::sin(t + phi - beta_))});
}

StaticWedge wedge_from_lines(Point apex, const Line& far_line,
                             const Line& near_line) {
  const double scale = 1.0 + norm(apex);
  if (std::abs(far_line.side(apex)) <= kOrientEps * scale ||
      std::abs(near_line.side(apex)) <= kOrientEps * scale) {
    throw Error(ErrorKind::degenerate, "apex lies on a wedge line");
  }

  StaticWedge w;
  const double g_far = std::atan2(far_line.direction.y, far_line.direction.x);
  const double g_near = std::atan2(near_line.direction.y, near_line.direction.x);
  w.parallel_ = std::abs(cross(far_line.direction, near_line.direction)) <=
                kOrientEps;

  // Frame: keep the global axes unless a slope gets close to vertical.
  constexpr double kSlopeMargin = 3.0 * kPi / 8.0;
  double rho = 0.0;
  if (std::abs(wrap_slope(g_far)) > kSlopeMargin ||
      std::abs(wrap_slope(g_near)) > kSlopeMargin) {
    if (w.parallel_) {
      rho = g_far;
    } else {
      const double u_far = normalize_angle(g_far);
      const double delta = std::fmod(normalize_angle(g_near - u_far), kPi);
      const double mid = u_far + 0.5 * delta;
      rho = delta <= kPi / 2 ? mid : mid + kPi / 2;
    }
    rho = wrap_slope(rho);
  }

  auto local_setup = [&](double frame) {
    const Point c = to_local(apex, frame);
    const double a_far = wrap_slope(g_far - frame);
    const double a_near = wrap_slope(g_near - frame);
    const double d_far =
        vertical_offset(c, to_local(far_line.point, frame), a_far);
    const double d_near =
        vertical_offset(c, to_local(near_line.point, frame), a_near);
    return std::tuple{a_far, a_near, d_far, d_near};
  };

  auto [a_far, a_near, d_far, d_near] = local_setup(rho);

  if (w.parallel_) {
    w.frame_ = rho;
    w.omega_ = w.beta_ = a_far;
    w.d_omega_ = d_far;
    w.d_beta_ = d_near;
    w.apex_side_ = 1;
    w.k_direction_ = std::nan("");
    w.apex_minus_k_x_ = std::nan("");
  } else {
    const bool far_is_omega = a_far > a_near;
    const int side = far_is_omega ? 1 : -1;
    double tan_w = std::tan(far_is_omega ? a_far : a_near);
    double tan_b = std::tan(far_is_omega ? a_near : a_far);
    double d1 = far_is_omega ? d_far : d_near;
    double d2 = far_is_omega ? d_near : d_far;
    double xck = (d1 - d2) / (tan_w - tan_b);
    if ((xck > 0.0 ? 1 : -1) != side && xck != 0.0) {
      // Half-turn: slopes are unchanged, offsets and x_C - x_K flip sign.
      rho = rho + kPi;
      std::tie(a_far, a_near, d_far, d_near) = local_setup(rho);
      d1 = far_is_omega ? d_far : d_near;
      d2 = far_is_omega ? d_near : d_far;
      tan_w = std::tan(far_is_omega ? a_far : a_near);
      tan_b = std::tan(far_is_omega ? a_near : a_far);
      xck = (d1 - d2) / (tan_w - tan_b);
    }
    w.frame_ = rho;
    w.omega_ = far_is_omega ? a_far : a_near;
    w.beta_ = far_is_omega ? a_near : a_far;
    w.d_omega_ = d1;
    w.d_beta_ = d2;
    w.apex_side_ = side;
    w.apex_minus_k_x_ = xck;

    const double s = cross(near_line.point - far_line.point, near_line.direction) /
                     cross(far_line.direction, near_line.direction);
    const Point k = far_line.point + s * far_line.direction;
    w.k_direction_ = std::atan2(k.y - apex.y, k.x - apex.x);
  }

  // Directions hitting both lines in front of the apex form the overlap of
  // two half-turn arcs.
  const double a1 = forward_arc_start(apex, far_line);
  const double a2 = forward_arc_start(apex, near_line);
  const double delta = ccw_offset(a1, a2);
  double lo, hi;
  if (delta < kPi) {
    lo = a1 + delta;
    hi = a1 + kPi;
  } else {
    lo = a1;
    hi = a1 + delta - kPi;
  }
  if (!(hi - lo > kWindowTol)) {
    throw Error(ErrorKind::degenerate, "wedge has an empty admissible window");
  }
  const double width = hi - lo;
  lo = normalize_angle(lo);
  hi = lo + width;

  auto far_is_farther = [&](double t) {
    return ray_distance(apex, far_line, t) > ray_distance(apex, near_line, t);
  };
  // Coincident lines bound an empty wedge; accepted, the area is zero.
  auto far_not_nearer = [&](double t) {
    const double f = ray_distance(apex, far_line, t);
    const double n = ray_distance(apex, near_line, t);
    return f >= n * (1.0 - 1e-12);
  };
  if (!w.parallel_) {
    // The ray through K splits the overlap; keep the side where the far
    // line really is farther.
    double kappa = lo + ccw_offset(lo, w.k_direction_);
    if (kappa > hi && kappa - kTwoPi >= lo - kWindowTol) kappa -= kTwoPi;
    kappa = std::clamp(kappa, lo, hi);
    if (far_is_farther(0.5 * (lo + kappa))) {
      hi = kappa;
    } else {
      lo = kappa;
    }
  } else if (!far_not_nearer(0.5 * (lo + hi))) {
    throw Error(ErrorKind::degenerate,
                "far line is not farther than near line from the apex");
  }
  if (!(hi - lo > kWindowTol)) {
    throw Error(ErrorKind::degenerate, "wedge has an empty admissible window");
  }
  w.theta_min_ = lo;
  w.theta_max_ = hi;
  return w;
}

StaticWedge wedge_from_offsets(Angle omega, Angle beta, double far_offset,
                               double near_offset) {
  const Point origin{0.0, 0.0};
  return wedge_from_lines(origin, Line::from_slope({0.0, far_offset}, omega),
                          Line::from_slope({0.0, near_offset}, beta));
}

namespace {

void check_phi(double phi) {
  if (!(phi >= 0.0 && phi < kPi)) {
    throw Error(ErrorKind::domain, "phi must lie in (0, pi)");
  }
}

double checked_direction(const StaticWedge& w, double theta, double phi) {
  check_phi(phi);
  const double t = w.rebase(theta);
  if (t < w.theta_min() - kWindowTol || t + phi > w.theta_max() + kWindowTol) {
    throw Error(ErrorKind::domain,
                "direction outside the wedge's admissible window");
  }
  return t;
}

void check_singular(const StaticWedge& w, double theta, double phi) {
  if (w.min_sine(theta, phi) < kSingularGuard) {
    throw Error(ErrorKind::near_singular, "closed form is near-singular");
  }
}

}  // namespace

double two_sector_area(const StaticWedge& w, Angle theta, Angle phi) {
  const double t = checked_direction(w, theta.radians(), phi.radians());
  check_singular(w, t, phi.radians());
  return w.area_raw(t, phi.radians());
}

double parallel_strip_area(const StaticWedge& w, Angle theta, Angle phi) {
  if (!w.parallel()) {
    throw Error(ErrorKind::domain, "wedge lines are not parallel");
  }
  const double t = checked_direction(w, theta.radians(), phi.radians());
  check_singular(w, t, phi.radians());
  const double tk = w.omega().radians();
  const double u = t - w.frame_rotation().radians();
  const double d1 = w.omega_offset() * w.omega_offset();
  const double d2 = w.beta_offset() * w.beta_offset();
  const double c = std::cos(tk);
  const double p = phi.radians();
  return (d1 - d2) * std::sin(p) * c * c /
         (2.0 * std::sin(u + p - tk) * std::sin(u - tk));
}

double dA_dphi(const StaticWedge& w, Angle theta, Angle phi) {
  const double t = checked_direction(w, theta.radians(), phi.radians());
  check_singular(w, t, phi.radians());
  return w.density_raw(t + phi.radians());
}

std::vector<double> PhiExtrema::values() const {
  std::vector<double> v;
  if (phi1) v.push_back(phi1->radians());
  if (phi2) v.push_back(phi2->radians());
  std::sort(v.begin(), v.end());
  return v;
}

PhiExtrema phi_extrema_candidates(const StaticWedge& w, Angle theta) {
  const double t = theta.radians() - w.frame_rotation().radians();
  const double om = w.omega().radians();
  const double be = w.beta().radians();
  const double p = w.omega_offset() * std::cos(om);
  const double q = w.beta_offset() * std::cos(be);
  const double scale = std::abs(p) + std::abs(q);

  auto solve = [&](double num, double den) -> std::optional<Angle> {
    if (std::abs(num) <= 1e-14 * scale) return std::nullopt;
    if (std::abs(den) <= 1e-14 * scale) return Angle(kPi / 2);
    double phi = std::atan(num / den);
    if (phi < 0.0) phi += kPi;
    if (phi <= 0.0 || phi >= kPi) return std::nullopt;
    return Angle(phi);
  };

  PhiExtrema out;
  out.phi1 = solve(q * std::sin(t - om) - p * std::sin(t - be),
                   p * std::cos(t - be) - q * std::cos(t - om));
  out.phi2 = solve(-(q * std::sin(t - om) + p * std::sin(t - be)),
                   p * std::cos(t - be) + q * std::cos(t - om));
  return out;
}

PhiExtrema phi_extrema(const StaticWedge& w, Angle theta) {
  const double t = w.rebase(theta.radians());
  const double window = std::min(w.theta_max() - t, kPi);
  auto keep = [&](const std::optional<Angle>& c) -> std::optional<Angle> {
    if (!c) return std::nullopt;
    // The arctan forms cancel badly near the window ends; polish the root
    // on the derivative itself.
    double phi = c->radians();
    for (int it = 0; it < 8; ++it) {
      const double slope = w.density_slope_raw(t + phi);
      if (slope == 0.0 || !std::isfinite(slope)) break;
      const double step = w.density_raw(t + phi) / slope;
      if (!std::isfinite(step) || std::abs(step) > 1e-2) break;
      phi -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(phi))) break;
    }
    if (phi <= kWindowTol || phi > window + kWindowTol) return std::nullopt;
    if (!(std::abs(w.density_raw(t + phi)) <= kExtremumResidual)) return std::nullopt;
    // An isolated extremum changes the sign of the derivative.
    const double h = 1e-7;
    const double below = w.density_raw(t + phi - h);
    const double above = w.density_raw(t + phi + h);
    if (!((below > 0.0 && above < 0.0) || (below < 0.0 && above > 0.0))) {
      return std::nullopt;
    }
    return Angle(phi);
  };
  const PhiExtrema raw = phi_extrema_candidates(w, Angle(t));
  return PhiExtrema{keep(raw.phi1), keep(raw.phi2)};
}

CellPieces::CellPieces(std::optional<StaticWedge> left,
                       std::optional<StaticWedge> right, Angle theta0,
                       Angle phi, double base_area)
    : left_(std::move(left)),
      right_(std::move(right)),
      theta0_(theta0.radians()),
      phi_(phi.radians()),
      base_(base_area) {
  if (!(phi_ > 0.0 && phi_ < kPi)) {
    throw Error(ErrorKind::domain, "phi must lie in (0, pi)");
  }
  auto check = [](const StaticWedge& w, double start) {
    const double s = w.rebase(start);
    if (s < w.theta_min() - kWindowTol || s > w.theta_max() + kWindowTol) {
      throw Error(ErrorKind::degenerate,
                  "rotation piece has an empty admissible window");
    }
  };
  if (left_) check(*left_, theta0_ + phi_);
  if (right_) check(*right_, theta0_);
}

double CellPieces::max_offset() const {
  double m = kPi;
  if (left_) m = std::min(m, left_->theta_max() - left_->rebase(theta0_ + phi_));
  if (right_) m = std::min(m, right_->theta_max() - right_->rebase(theta0_));
  return std::max(m, 0.0);
}

double CellPieces::evaluate(double delta) const {
  double e = base_;
  if (left_) {
    if (left_->min_sine(theta0_ + phi_, delta) < kSingularGuard) {
      throw Error(ErrorKind::near_singular, "left piece is near-singular");
    }
    e += left_->area_raw(theta0_ + phi_, delta);
  }
  if (right_) {
    if (right_->min_sine(theta0_, delta) < kSingularGuard) {
      throw Error(ErrorKind::near_singular, "right piece is near-singular");
    }
    e -= right_->area_raw(theta0_, delta);
  }
  return e;
}

double CellPieces::derivative(double delta) const {
  double d = 0.0;
  if (left_) d += left_->density_raw(theta0_ + phi_ + delta);
  if (right_) d -= right_->density_raw(theta0_ + delta);
  return d;
}

double CellPieces::second_derivative(double delta) const {
  double d = 0.0;
  if (left_) d += left_->density_slope_raw(theta0_ + phi_ + delta);
  if (right_) d -= right_->density_slope_raw(theta0_ + delta);
  return d;
}

std::vector<double> CellPieces::piece_extrema(double limit) const {
  std::vector<double> out;
  auto add = [&](const StaticWedge& w, double start) {
    for (double v : phi_extrema(w, Angle(start)).values()) {
      if (v > 0.0 && v < limit) out.push_back(v);
    }
  };
  if (left_) add(*left_, theta0_ + phi_);
  if (right_) add(*right_, theta0_);
  std::sort(out.begin(), out.end());
  return out;
}

CellPieces rotation_pieces(std::optional<StaticWedge> left,
                           std::optional<StaticWedge> right, Angle theta0,
                           Angle phi, double base_area) {
  return CellPieces(std::move(left), std::move(right), theta0, phi, base_area);
}

}  // namespace fovmax
