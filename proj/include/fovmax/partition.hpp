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

// Vertex partitioning of a convex polygon from an outside apex, near/far
// edges of every section, the breakpoint sequence of directions and the
// per-cell left/middle/right descriptors.

#include <optional>
#include <span>
#include <vector>

#include "fovmax/analytic.hpp"
#include "fovmax/geometry.hpp"

namespace fovmax {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
};

/// Vertex rays sorted by direction. Angles are re-based so that the whole
/// polygon lies in [angles.front(), angles.back()] with no 0/2pi seam.
struct AngularOrder {
  AngularSpan span;
  std::vector<double> angles;               // strictly increasing
  std::vector<std::size_t> vertex_order;    // representative vertex per ray
  std::vector<std::size_t> vertex_rank;     // ray index of every vertex
};

/// Throws ErrorKind::unsupported if the apex is not strictly outside.
AngularOrder angular_order(const ConvexPolygon& poly, Point apex);

struct SectionEdges {
  std::vector<std::size_t> near;  // edge i runs from vertex i to i+1
  std::vector<std::size_t> far;
};

/// Near (first crossed) and far edge of each of the angles.size()-1
/// sections, by walking the two boundary chains between the extreme rays.
SectionEdges section_edges(const ConvexPolygon& poly, const AngularOrder& order);

/// Merged breakpoints {a_j} U {a_j - phi} restricted to `domain` (default
/// [a_0 - phi, a_m]), with the domain ends included. Sorted, deduplicated.
std::vector<double> breakpoints(std::span<const double> sorted_angles,
                                Angle phi,
                                std::optional<Interval> domain = std::nullopt);

/// One left/middle/right equivalence class of directions.
struct RotationCell {
  Interval interval;
  /// Section holding the moving left (resp. right) boundary, if any. When
  /// both semi-lines lie in one section the two are equal.
  std::optional<std::size_t> left_section;
  std::optional<std::size_t> right_section;
  std::optional<StaticWedge> left_wedge;
  std::optional<StaticWedge> right_wedge;
  /// Ray bounding the left piece from the right (a_i) and the right piece
  /// from the left (a_{j+1}).
  double left_boundary = 0.0;
  double right_boundary = 0.0;
  double middle_area = 0.0;
  /// A moving boundary lies in a section whose wedge could not be built.
  bool degenerate = false;
  bool empty = false;

  bool same_section() const {
    return left_section && right_section && *left_section == *right_section;
  }
  bool constant() const { return !left_section && !right_section; }
};

class ScenePartition {
 public:
  ScenePartition(ConvexPolygon poly, Point apex, Angle phi,
                 std::optional<Interval> domain = std::nullopt);

  const ConvexPolygon& polygon() const { return poly_; }
  Point apex() const { return apex_; }
  double phi() const { return phi_; }
  const AngularOrder& order() const { return order_; }
  const SectionEdges& edges() const { return edges_; }
  std::size_t section_count() const { return order_.angles.size() - 1; }
  const std::optional<StaticWedge>& section_wedge(std::size_t s) const {
    return wedges_[s];
  }
  double section_area(std::size_t s) const { return section_area_[s]; }
  Interval domain() const { return domain_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<RotationCell>& cells() const { return cells_; }

  /// Section containing direction t strictly inside, -1 below the span and
  /// section_count() above it.
  long section_of(double t) const;

 private:
  ConvexPolygon poly_;
  Point apex_;
  double phi_;
  AngularOrder order_;
  SectionEdges edges_;
  std::vector<std::optional<StaticWedge>> wedges_;
  std::vector<double> section_area_;
  std::vector<double> prefix_area_;
  Interval domain_;
  std::vector<double> breakpoints_;
  std::vector<RotationCell> cells_;

  friend RotationCell cell_descriptor(const ScenePartition& scene,
                                      Interval interval);
};

/// Classifies the cell by probing its midpoint direction.
RotationCell cell_descriptor(const ScenePartition& scene, Interval interval);

/// Middle area plus the analytic left and right pieces at direction theta.
/// Throws ErrorKind::near_singular where the closed form degenerates.
double cell_objective(const ScenePartition& scene, const RotationCell& cell,
                      double theta);

/// Area of P intersect S(C, theta, phi) by clipping.
double clip_objective(const ScenePartition& scene, double theta);

}  // namespace fovmax
