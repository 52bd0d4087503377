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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "fovmax/errors.hpp"
#include "fovmax/geometry.hpp"
#include "support.hpp"

using namespace fovmax;
using namespace fovmax::testing;

namespace {

const double kSqrt3 = std::sqrt(3.0);

ConvexPolygon unit_square() {
  return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexPolygon wide_square() {
  return ConvexPolygon({{-1, 1}, {1, 1}, {1, 3}, {-1, 3}});
}

ConvexPolygon offset_square() {
  return ConvexPolygon({{1, 1}, {2, 1}, {2, 2}, {1, 2}});
}

double area_of(const std::optional<ConvexPolygon>& p) {
  return p ? shoelace_area(*p) : 0.0;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::validation;
}

}  // namespace

TEST_CASE("point rejects non-finite coordinates") {
  CHECK_THROWS_AS(Point(std::nan(""), 0.0), Error);
  CHECK_THROWS_AS(Point(0.0, std::numeric_limits<double>::infinity()), Error);
  CHECK_NOTHROW(Point(1.0, -2.0));
}

TEST_CASE("angle normalization is explicit") {
  const Angle a(7.0);
  CHECK(a.radians() == 7.0);
  CHECK(a.normalized() == doctest::Approx(7.0 - kTwoPi).epsilon(1e-15));
  CHECK(Angle(-0.5).normalized() == doctest::Approx(kTwoPi - 0.5));
  CHECK((Angle(3.0) + Angle(4.0)).radians() == 7.0);
  CHECK(normalize_angle(kTwoPi) == 0.0);
}

TEST_CASE("shoelace area") {
  CHECK(shoelace_area(unit_square()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(shoelace_area(ConvexPolygon({{0, 0}, {2, 0}, {0, 2}})) ==
        doctest::Approx(2.0).epsilon(1e-15));

  // (9 sqrt3 + 9)/4 - sqrt3/6, expanded by hand.
  const ConvexPolygon quad({{1 / kSqrt3, 1},
                            {(3 * kSqrt3 + 3) / 2, (9 + 3 * kSqrt3) / 2},
                            {0, 3},
                            {0, 1}});
  const double expected = (9 * kSqrt3 + 9) / 4 - kSqrt3 / 6;
  CHECK(shoelace_area(quad) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(shoelace_area(quad) == doctest::Approx(5.8585).epsilon(1e-4));
}

TEST_CASE("shoelace equals fan triangulation sum") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto poly = random_convex(rng, 3 + trial % 20);
    const auto v = poly.vertices();
    const std::size_t k = trial % v.size();
    double fan = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      fan += shoelace({v[k], v[(k + i) % v.size()], v[(k + i + 1) % v.size()]});
    }
    CHECK(shoelace_area(poly) == doctest::Approx(fan).epsilon(1e-12));
  }
}

TEST_CASE("polygon validation") {
  auto message = [](std::vector<Point> pts) {
    try {
      ConvexPolygon p(std::move(pts));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::validation);
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message({{0, 0}, {0, 1}, {1, 1}, {1, 0}}) == "polygon not counter-clockwise");
  CHECK(message({{0, 0}, {1, 0}}) == "polygon has fewer than 3 vertices");
  CHECK(message({{0, 0}, {1, 0}, {1, 0}, {0, 1}}).find("duplicate consecutive vertices") !=
        std::string::npos);
  CHECK(message({{0, 0}, {1, 0}, {2, 0}}).find("zero area") != std::string::npos);
  CHECK(message({{0, 0}, {2, 0}, {1, 0.5}, {2, 2}, {0, 2}}).find("polygon not convex") !=
        std::string::npos);
  // Collinear middle vertex is allowed.
  CHECK(message({{0, 0}, {1, 0}, {2, 0}, {2, 2}}) == "accepted");
}

TEST_CASE("vertex angle") {
  CHECK(vertex_angle({0, 0}, {1, 1}).radians() == doctest::Approx(kPi / 4));
  CHECK(vertex_angle({0, 0}, {-1, 0}).radians() == doctest::Approx(kPi));
  CHECK(vertex_angle({1, 2}, {1, 5}).radians() == doctest::Approx(kPi / 2));
  CHECK(vertex_angle({0, 0}, {1, -1}).radians() == doctest::Approx(7 * kPi / 4));
  CHECK(kind_of([] { vertex_angle({1, 1}, {1, 1}); }) == ErrorKind::degenerate);
}

TEST_CASE("ray line intersection") {
  const Line y1 = Line::from_slope({0, 1}, Angle(0.0));
  const auto a = ray_line_intersection({0, 0}, Angle(kPi / 3), y1);
  REQUIRE(a);
  CHECK(a->x == doctest::Approx(1 / kSqrt3).epsilon(1e-14));
  CHECK(a->y == doctest::Approx(1.0).epsilon(1e-14));

  const auto b = ray_line_intersection({0, 0}, Angle(kPi / 2),
                                       Line::from_slope({0, 3}, Angle(kPi / 4)));
  REQUIRE(b);
  CHECK(b->x == doctest::Approx(0.0));
  CHECK(b->y == doctest::Approx(3.0).epsilon(1e-14));

  CHECK_FALSE(ray_line_intersection({0, 0}, Angle(0.0), y1));
  // Backwards hit (t < 0) is not an intersection of the half-line.
  CHECK_FALSE(ray_line_intersection({0, 0}, Angle(-kPi / 2), y1));
  // Origin on the line.
  const auto c = ray_line_intersection({5, 1}, Angle(1.0), y1);
  REQUIRE(c);
  CHECK(*c == Point(5, 1));
}

TEST_CASE("half-plane clipping") {
  // Keep x <= 0.5: left of the upward line x = 0.5.
  const auto half = clip_halfplane(unit_square(), Line::through({0.5, 0}, {0.5, 1}), true);
  CHECK(area_of(half) == doctest::Approx(0.5).epsilon(1e-14));

  const auto same = clip_halfplane(unit_square(), Line::through({0, 2}, {-1, 2}), true);
  REQUIRE(same);
  CHECK(area_of(same) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(same->size() == 4);

  // x + y <= 1: right of the line from (0,1) to (1,0).
  const auto tri = clip_halfplane(unit_square(), Line::through({0, 1}, {1, 0}), false);
  REQUIRE(tri);
  CHECK(area_of(tri) == doctest::Approx(0.5).epsilon(1e-14));

  // y >= 5 misses the square.
  CHECK_FALSE(clip_halfplane(unit_square(), Line::through({0, 5}, {1, 5}), true));
}

TEST_CASE("half-plane clipping is idempotent") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto poly = random_convex(rng, 3 + trial % 12);
    const Point p{uniform(rng, -3, 3), uniform(rng, -3, 3)};
    const Line l = Line::from_slope(p, Angle(uniform(rng, 0, kPi)));
    const auto once = clip_halfplane(poly, l, true);
    if (!once) continue;
    const auto twice = clip_halfplane(*once, l, true);
    REQUIRE(twice);
    REQUIRE(twice->size() == once->size());
    for (std::size_t i = 0; i < once->size(); ++i) {
      CHECK((*twice)[i].x == doctest::Approx((*once)[i].x).epsilon(1e-12));
      CHECK((*twice)[i].y == doctest::Approx((*once)[i].y).epsilon(1e-12));
    }
  }
}

TEST_CASE("sector clip") {
  const auto sq = wide_square();
  CHECK(area_of(sector_clip(sq, Sector({0, 0}, Angle(kPi / 4), Angle(kPi / 2)))) ==
        doctest::Approx(4.0).epsilon(1e-14));
  CHECK(area_of(sector_clip(sq, Sector({0, 0}, Angle(kPi / 2), Angle(kPi / 4)))) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK_FALSE(sector_clip(sq, Sector({0, 0}, Angle(3.5), Angle(0.3))));
}

TEST_CASE("sector opening must lie in (0, pi)") {
  CHECK_THROWS_AS(Sector({0, 0}, Angle(0.0), Angle(0.0)), Error);
  CHECK_THROWS_AS(Sector({0, 0}, Angle(0.0), Angle(kPi)), Error);
  CHECK_NOTHROW(Sector({0, 0}, Angle(0.0), Angle(kPi - 1e-9)));
}

TEST_CASE("classification") {
  const auto sq = offset_square();
  const Point c{0, 0};
  CHECK(classify(sq, Sector(c, Angle(0.6), Angle(0.3))) == IntersectionKind::fully_intersects);
  CHECK(classify(sq, Sector(c, Angle(0.2), Angle(0.5))) == IntersectionKind::partially_intersects);
  CHECK(classify(sq, Sector(c, Angle(0.4), Angle(0.8))) == IntersectionKind::contains);
  CHECK(classify(sq, Sector(c, Angle(2.0), Angle(0.5))) == IntersectionKind::no_intersection);
  CHECK(kind_of([&] { classify(sq, Sector({1.5, 1.5}, Angle(0.0), Angle(1.0))); }) ==
        ErrorKind::unsupported);
  CHECK(kind_of([&] { classify(sq, Sector({1.5, 1.0}, Angle(0.0), Angle(1.0))); }) ==
        ErrorKind::unsupported);
}

TEST_CASE("classification matches ray/segment hits and clip area") {
  Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto poly = random_convex(rng, 3 + trial % 10);
    const Point apex = random_outside_apex(rng, poly);
    const double theta = uniform(rng, 0, kTwoPi);
    const double phi = uniform(rng, 0.01, 3.0);
    const Sector s(apex, Angle(theta), Angle(phi));
    const auto kind = classify(poly, s);
    const bool r = ray_hits_polygon(apex, theta, poly);
    const bool l = ray_hits_polygon(apex, theta + phi, poly);
    const double clip = area_of(sector_clip(poly, s));
    const double full = shoelace_area(poly);
    if (kind == IntersectionKind::contains) {
      CHECK(clip == doctest::Approx(full).epsilon(1e-12));
    } else {
      CHECK(clip < full * (1 - 1e-12));
      CHECK((kind == IntersectionKind::fully_intersects) == (r && l));
      CHECK((kind == IntersectionKind::partially_intersects) == (r != l));
    }
  }
}

TEST_CASE("classification is rotation invariant") {
  Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const auto poly = random_convex(rng, 3 + trial % 8);
    const Point apex = random_outside_apex(rng, poly);
    const double theta = uniform(rng, 0, kTwoPi);
    const double phi = uniform(rng, 0.05, 2.5);
    const double rho = uniform(rng, 0, kTwoPi);
    auto rot = [&](Point p) {
      return Point(p.x * std::cos(rho) - p.y * std::sin(rho),
                   p.x * std::sin(rho) + p.y * std::cos(rho));
    };
    std::vector<Point> rp;
    for (const Point& p : poly.vertices()) rp.push_back(rot(p));
    const auto a = classify(poly, Sector(apex, Angle(theta), Angle(phi)));
    const auto b = classify(ConvexPolygon(rp), Sector(rot(apex), Angle(theta + rho), Angle(phi)));
    CHECK(a == b);
  }
}
