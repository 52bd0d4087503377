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

// Closed-form area of a rotating sector S(C, theta, phi) intersected with a
// static wedge bounded by two lines, its phi-derivatives, the analytic
// phi-extrema and the rotation decomposition
//
//   A_phi(theta0 + delta) = A(theta0, phi) + A_{theta0+phi}(delta)
//                                          - A_{theta0}(delta).
//
// The wedge is evaluated in a rotated local frame in which both line slopes
// lie strictly inside (-pi/2, pi/2). Areas are frame invariant, so callers
// always pass global directions.

#include <optional>
#include <vector>

#include "fovmax/geometry.hpp"

namespace fovmax {

/// Directions closer than this to an admissible-window boundary are accepted.
inline constexpr double kWindowTol = 1e-9;
/// Sine factors below this make the closed form near-singular.
inline constexpr double kSingularGuard = 1e-9;
/// Largest |dA/dphi| accepted at a reported phi-extremum.
inline constexpr double kExtremumResidual = 1e-9;

/// Two static lines seen from a fixed apex.
///
/// `omega`/`beta` are the local slope angles of the two lines with
/// beta <= omega, `omega_offset`/`beta_offset` (D1, D2) the signed vertical
/// offsets from the apex to those lines along the local vertical, and
/// `apex_side` the sign of x_C - x_K (K = line intersection) in the local
/// frame. The squared distances of the closed form are d_i = apex_side *
/// D_i^2. The frame is chosen so that apex_side is +1 exactly when the
/// omega line is the far one. For parallel lines omega == beta, apex_side
/// is +1 and D1 belongs to the far line.
class StaticWedge {
 public:
  Angle omega() const { return Angle(omega_); }
  Angle beta() const { return Angle(beta_); }
  double omega_offset() const { return d_omega_; }
  double beta_offset() const { return d_beta_; }
  Angle frame_rotation() const { return Angle(frame_); }
  int apex_side() const { return apex_side_; }
  bool parallel() const { return parallel_; }
  /// Admissible direction window (theta_min, theta_max) in global radians.
  /// A sector fully intersects the wedge iff theta in (theta_min,
  /// theta_max - phi).
  double theta_min() const { return theta_min_; }
  double theta_max() const { return theta_max_; }
  /// Global direction of the ray through the line intersection K; for
  /// parallel lines there is no K and this is NaN.
  double k_direction() const { return k_direction_; }
  /// x_C - x_K in the local frame (NaN when parallel).
  double apex_minus_k_x() const { return apex_minus_k_x_; }

  /// Re-bases theta to the window: result in [theta_min - tol, theta_min +
  /// 2pi - tol).
  double rebase(double theta) const;

  /// Closed form without domain checks or singularity guard.
  double area_raw(double theta, double phi) const;
  /// dA/dphi; depends on theta + phi only.
  double density_raw(double left_direction) const;
  /// d^2A/dphi^2 as a function of the left-ray direction.
  double density_slope_raw(double left_direction) const;
  /// Smallest |sin| among the four closed-form denominator factors.
  double min_sine(double theta, double phi) const;

  friend StaticWedge wedge_from_lines(Point apex, const Line& far_line,
                                      const Line& near_line);

 private:
  double omega_ = 0.0;
  double beta_ = 0.0;
  double d_omega_ = 0.0;
  double d_beta_ = 0.0;
  double frame_ = 0.0;
  int apex_side_ = 1;
  bool parallel_ = false;
  double theta_min_ = 0.0;
  double theta_max_ = 0.0;
  double k_direction_ = 0.0;
  double apex_minus_k_x_ = 0.0;
};

/// Builds the wedge between `near_line` (crossed first by rays from the
/// apex) and `far_line`. Throws ErrorKind::degenerate if the apex lies on a
/// line or the admissible window is empty.
StaticWedge wedge_from_lines(Point apex, const Line& far_line,
                             const Line& near_line);

/// Convenience: apex at the origin, far line y = tan(omega) x + far_offset,
/// near line y = tan(beta) x + near_offset.
StaticWedge wedge_from_offsets(Angle omega, Angle beta, double far_offset,
                               double near_offset);

/// Area of S(C, theta, phi) intersected with the wedge. Throws
/// ErrorKind::domain outside the admissible window and
/// ErrorKind::near_singular when a denominator factor is below the guard.
double two_sector_area(const StaticWedge& w, Angle theta, Angle phi);

/// Parallel-line special case. Throws ErrorKind::domain for a non-parallel
/// wedge.
double parallel_strip_area(const StaticWedge& w, Angle theta, Angle phi);

/// dA/dphi = c1 / sin^2(theta+phi-omega) - c2 / sin^2(theta+phi-beta).
double dA_dphi(const StaticWedge& w, Angle theta, Angle phi);

struct PhiExtrema {
  std::optional<Angle> phi1;
  std::optional<Angle> phi2;

  std::vector<double> values() const;
};

/// The two arctan solutions of dA/dphi = 0 mapped into [0, pi), before any
/// filtering. A candidate mapping to 0 (zero numerator) is absent.
PhiExtrema phi_extrema_candidates(const StaticWedge& w, Angle theta);

/// Candidates inside the admissible phi window (0, theta_max - theta],
/// Newton-polished, with |dA/dphi| <= kExtremumResidual and a sign change.
/// Roots where the derivative is too steep to resolve that residual in
/// double precision (nearly parallel lines) are dropped.
PhiExtrema phi_extrema(const StaticWedge& w, Angle theta);

/// Evaluator of the rotation decomposition on [theta0, theta0 + length].
/// A missing wedge contributes zero (that semi-line lies outside the
/// polygon's angular span).
class CellPieces {
 public:
  CellPieces(std::optional<StaticWedge> left, std::optional<StaticWedge> right,
             Angle theta0, Angle phi, double base_area);

  double base_area() const { return base_; }
  Angle theta0() const { return Angle(theta0_); }
  Angle phi() const { return Angle(phi_); }
  const std::optional<StaticWedge>& left() const { return left_; }
  const std::optional<StaticWedge>& right() const { return right_; }

  /// Largest offset for which both pieces stay in their windows.
  double max_offset() const;

  /// E(delta) = base + A_L(delta) - A_R(delta). Throws near_singular.
  double evaluate(double delta) const;
  /// dE/ddelta.
  double derivative(double delta) const;
  /// d^2E/ddelta^2.
  double second_derivative(double delta) const;

  /// phi-extrema of both pieces as offsets, sorted, inside (0, limit).
  std::vector<double> piece_extrema(double limit) const;

 private:
  std::optional<StaticWedge> left_;
  std::optional<StaticWedge> right_;
  double theta0_;
  double phi_;
  double base_;
};

CellPieces rotation_pieces(std::optional<StaticWedge> left,
                           std::optional<StaticWedge> right, Angle theta0,
                           Angle phi, double base_area);

}  // namespace fovmax
