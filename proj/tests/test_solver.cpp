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

#include "fovmax/analytic.hpp"
#include "fovmax/errors.hpp"
#include "fovmax/oracle.hpp"
#include "fovmax/solver.hpp"
#include "support.hpp"

using namespace fovmax;
using namespace fovmax::testing;

namespace {

ConvexPolygon offset_square() {
  return ConvexPolygon({{1, 1}, {2, 1}, {2, 2}, {1, 2}});
}

ConvexPolygon wide_square() {
  return ConvexPolygon({{-1, 1}, {1, 1}, {1, 3}, {-1, 3}});
}

struct GridBest {
  double theta;
  double area;
};

// Plain uniform scan of clip areas; first maximum wins.
GridBest scan(const ConvexPolygon& poly, Point apex, double phi, double lo,
              double hi, double step) {
  GridBest best{lo, -1.0};
  const auto n = static_cast<long>(std::ceil((hi - lo) / step));
  for (long k = 0; k <= n; ++k) {
    const double t = std::min(hi, lo + k * step);
    const double a = clip_area_at(poly, apex, Angle(t), Angle(phi));
    if (a > best.area) best = {t, a};
  }
  return best;
}

const RotationCell& cell_containing(const ScenePartition& scene, double t) {
  for (const auto& c : scene.cells()) {
    if (c.interval.lo <= t && t <= c.interval.hi) return c;
  }
  FAIL("no cell contains the direction");
  return scene.cells().front();
}

}  // namespace

TEST_CASE("precision") {
  CHECK(Precision(8).tolerance() == doctest::Approx(1e-8));
  CHECK_THROWS_AS(Precision(1.0), Error);
  CHECK_THROWS_AS(Precision(0.5), Error);
}

TEST_CASE("safeguarded root") {
  auto sq = [](double x) { return x * x - 2; };
  auto dsq = [](double x) { return 2 * x; };
  const auto r = safeguarded_root(sq, dsq, {1, 2}, Precision(10));
  REQUIRE(r);
  CHECK(std::abs(r->root - std::sqrt(2.0)) < 1e-10);
  CHECK(r->root == doctest::Approx(1.4142135624).epsilon(1e-10));

  const auto c = safeguarded_root([](double x) { return std::cos(x); },
                                  [](double x) { return -std::sin(x); }, {1, 2},
                                  Precision(8));
  REQUIRE(c);
  CHECK(std::abs(c->root - kPi / 2) < 1e-8);

  CHECK_FALSE(safeguarded_root([](double x) { return x * x + 1; },
                               [](double x) { return 2 * x; }, {0, 1}, Precision(8)));

  try {
    safeguarded_root(sq, dsq, {2, 1}, Precision(8));
    FAIL("reversed bracket accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain);
  }
  CHECK_THROWS_AS(safeguarded_root(sq, dsq, {1, 1}, Precision(8)), Error);
}

TEST_CASE("safeguarded root survives hostile derivatives") {
  // Newton from the midpoint overshoots on atan; a wrong derivative is
  // harmless too.
  auto g = [](double x) { return std::atan(x - 0.3); };
  const auto a = safeguarded_root(g, [](double x) { return 1 / (1 + (x - 0.3) * (x - 0.3)); },
                                  {-20, 9}, Precision(12));
  REQUIRE(a);
  CHECK(std::abs(a->root - 0.3) < 1e-12);
  const auto b = safeguarded_root(g, [](double) { return -1e-3; }, {-20, 9}, Precision(9));
  REQUIRE(b);
  CHECK(std::abs(b->root - 0.3) < 1e-9);
  CHECK(b->iterations <= 200);
  // Unreachable precision: stops at adjacent doubles, bracket reported.
  const auto c = safeguarded_root([](double x) { return x * x - 2; },
                                  [](double) { return 0.0; }, {1, 2}, Precision(30));
  REQUIRE(c);
  CHECK(std::abs(c->root - std::sqrt(2.0)) < 1e-15);
  CHECK(c->bracket > 0.0);
  CHECK(c->bracket < 1e-15);
}

TEST_CASE("constant cell") {
  const ScenePartition scene(offset_square(), {0, 0}, Angle(2.0));
  bool seen = false;
  for (const auto& c : scene.cells()) {
    if (!c.constant() || c.empty) continue;
    seen = true;
    const auto r = maximize_cell(scene, c, Precision(8));
    CHECK(r.theta_star == c.interval.lo);
    CHECK(r.area == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(seen);
}

TEST_CASE("cell maxima against a dense grid") {
  {
    const ScenePartition scene(offset_square(), {0, 0}, Angle(0.1));
    const auto& c = cell_containing(scene, 0.7354);
    CHECK(c.interval.lo == doctest::Approx(kPi / 4 - 0.1));
    const auto r = maximize_cell(scene, c, Precision(8));
    const auto g = scan(offset_square(), {0, 0}, 0.1, c.interval.lo, c.interval.hi, 1e-5);
    CHECK(std::abs(r.theta_star - g.theta) <= 1e-4);
    CHECK(r.area >= g.area - 1e-8);
    CHECK(std::abs(r.area - g.area) <= 1e-8);
  }
  {
    const ScenePartition scene(wide_square(), {0, 0}, Angle(kPi / 3));
    const auto r = maximize_cell(scene, cell_containing(scene, kPi / 3), Precision(8));
    CHECK(std::abs(r.theta_star - kPi / 3) <= 1e-4);
  }
}

TEST_CASE("global maxima") {
  {
    const auto r = maximize_global(wide_square(), {0, 0}, Angle(kPi / 2), Precision(8));
    CHECK(r.theta_star == doctest::Approx(kPi / 4).epsilon(1e-14));
    CHECK(r.area == doctest::Approx(4.0).epsilon(1e-14));
  }
  {
    const auto r = maximize_global(wide_square(), {0, 0}, Angle(kPi / 3), Precision(8));
    CHECK(std::abs(r.theta_star - kPi / 3) <= 1e-4);
    const auto g = scan(wide_square(), {0, 0}, kPi / 3, 0.9, 1.2, 1e-5);
    CHECK(r.area >= g.area - 1e-7);
    CHECK(std::abs(r.area - g.area) <= 1e-7);
    CHECK(r.interior);
  }
  {
    const auto poly = offset_square();
    const auto r = maximize_global(poly, {0, 0}, Angle(0.1), Precision(8));
    const auto g = scan(poly, {0, 0}, 0.1, std::atan(0.5) - 0.1, std::atan(2.0), 1e-5);
    CHECK(angular_distance(r.theta_star, g.theta) <= 1e-4);
    CHECK(std::abs(r.area - g.area) <= 1e-7 * g.area);
    CHECK(r.area >= g.area);
  }
}

TEST_CASE("global maximum with a restricted domain") {
  // The wide square seen through (0.4, 0.6) only.
  const auto r = maximize_global(wide_square(), {0, 0}, Angle(kPi / 3), Precision(8),
                                 Interval{0.4, 0.6});
  CHECK(r.theta_star >= 0.4 - 1e-12);
  CHECK(r.theta_star <= 0.6 + 1e-12);
  const auto g = scan(wide_square(), {0, 0}, kPi / 3, 0.4, 0.6, 1e-5);
  CHECK(r.area >= g.area - 1e-9);
  // The same window written one turn later.
  const auto s = maximize_global(wide_square(), {0, 0}, Angle(kPi / 3), Precision(8),
                                 Interval{0.4 + kTwoPi, 0.6 + kTwoPi});
  CHECK(s.theta_star == doctest::Approx(r.theta_star).epsilon(1e-14));
}

TEST_CASE("solver errors") {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::validation;
  };
  CHECK(kind([] { maximize_global(offset_square(), {1.5, 1.5}, Angle(0.3), Precision(8)); }) ==
        ErrorKind::unsupported);
  CHECK(kind([] {
          maximize_global(offset_square(), {0, 0}, Angle(0.3), Precision(8), Interval{3.0, 3.5});
        }) == ErrorKind::domain);
}

TEST_CASE("serial and parallel solvers agree exactly") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto poly = random_convex(rng, 3 + trial % 30);
    const Point apex = random_outside_apex(rng, poly);
    const double phi = uniform(rng, 0.05, 2.5);
    const auto a = maximize_global(poly, apex, Angle(phi), Precision(9), std::nullopt,
                                   Execution::serial);
    const auto b = maximize_global(poly, apex, Angle(phi), Precision(9), std::nullopt,
                                   Execution::parallel);
    CHECK(a.theta_star == b.theta_star);
    CHECK(a.area == b.area);
    CHECK(a.cell_index == b.cell_index);
  }
}

TEST_CASE("interior optima are stationary and local maxima") {
  Rng rng(42);
  int interior = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto poly = random_convex(rng, 3 + trial % 10);
    const Point apex = random_outside_apex(rng, poly);
    const double phi = uniform(rng, 0.05, 2.5);
    const Precision prec(8);
    const auto r = maximize_global(poly, apex, Angle(phi), prec);
    auto f = [&](double t) { return clip_area_at(poly, apex, Angle(t), Angle(phi)); };
    const double eps = prec.tolerance();
    CHECK(f(r.theta_star - eps) <= r.area + 1e-9);
    CHECK(f(r.theta_star + eps) <= r.area + 1e-9);
    if (!r.interior) continue;
    ++interior;
    const double h = 1e-6;
    CHECK(std::abs((f(r.theta_star + h) - f(r.theta_star - h)) / (2 * h)) <= 1e-5);
  }
  CHECK(interior > 10);
}

TEST_CASE("at most one derivative sign change between sorted extrema") {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto poly = random_convex(rng, 3 + trial % 10);
    const Point apex = random_outside_apex(rng, poly);
    const double phi = uniform(rng, 0.05, 2.5);
    const ScenePartition scene(poly, apex, Angle(phi));
    for (const auto& c : scene.cells()) {
      if (c.constant() || c.empty || c.degenerate) continue;
      const double len = std::min(c.interval.width(), phi);
      std::optional<CellPieces> p;
      try {
        p.emplace(c.left_section ? c.left_wedge : std::nullopt,
                  c.right_section ? c.right_wedge : std::nullopt,
                  Angle(c.interval.lo), Angle(phi), 0.0);
      } catch (const Error&) {
        continue;
      }
      std::vector<double> cuts{0.0};
      for (double e : p->piece_extrema(len)) cuts.push_back(e);
      cuts.push_back(len);
      for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        int changes = 0;
        double prev = p->derivative(cuts[s]);
        for (double d = cuts[s] + 1e-3; d < cuts[s + 1]; d += 1e-3) {
          const double cur = p->derivative(d);
          if ((cur > 0) != (prev > 0) && cur != 0 && prev != 0) ++changes;
          prev = cur;
        }
        CHECK(changes <= 1);
      }
    }
  }
}

TEST_CASE("raising the precision never lowers the area") {
  Rng rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const auto poly = random_convex(rng, 3 + trial % 10);
    const Point apex = random_outside_apex(rng, poly);
    const double phi = uniform(rng, 0.05, 2.5);
    // Areas within the solver's tie tolerance are equal.
    const double tie = 1e-12 * std::max(1.0, shoelace_area(poly));
    double prev = -1.0;
    for (double digits : {3.0, 5.0, 8.0, 11.0}) {
      const double a = maximize_global(poly, apex, Angle(phi), Precision(digits)).area;
      CHECK(a >= prev - tie);
      prev = std::max(prev, a);
    }
  }
}

TEST_CASE("area profile of the figure wedge is not monotone") {
  const auto w = wedge_from_lines({-5.1923, 4.7450},
                                  Line::from_slope({0, 16}, Angle(std::atan(0.57735))),
                                  Line::from_slope({0, 6}, Angle(0.0)));
  const Angle phi(kPi / 12);
  const double a = two_sector_area(w, Angle(1.43), phi);
  const double b = two_sector_area(w, Angle(1.90), phi);
  const double c = two_sector_area(w, Angle(2.48), phi);
  CHECK(a > b);
  CHECK(b < c);
}
