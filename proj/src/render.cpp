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

#include "fovmax/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "fovmax/oracle.hpp"

namespace fovmax {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 24.0;
constexpr double kInsetW = 200.0;
constexpr double kInsetH = 110.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string fmt_label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

// World to screen, y pointing down.
struct Viewport {
  double min_x, max_y, scale;

  double sx(double x) const { return kMargin + (x - min_x) * scale; }
  double sy(double y) const { return kMargin + (max_y - y) * scale; }
  std::string xy(Point p) const { return fmt(sx(p.x)) + "," + fmt(sy(p.y)); }
};

}  // namespace

std::string render_svg(const ScenePartition& scene, const SolveResult& result,
                       const RenderOptions& options) {
  const auto verts = scene.polygon().vertices();
  const Point apex = scene.apex();
  double reach = 0.0;
  for (const Point& v : verts) reach = std::max(reach, norm(v - apex));
  reach *= 1.15;

  // Frame the polygon, the apex and the drawn extent of the optimal sector.
  std::vector<Point> pts(verts.begin(), verts.end());
  pts.push_back(apex);
  const double t0 = result.theta_star;
  const double t1 = t0 + scene.phi();
  for (int k = 0; k <= 16; ++k) {
    pts.push_back(apex + reach * unit_vector(Angle(t0 + (t1 - t0) * k / 16.0)));
  }
  double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const Viewport vp{min_x, max_y, (kCanvas - 2.0 * kMargin) / extent};
  const double width = 2.0 * kMargin + (max_x - min_x) * vp.scale;
  const double height = 2.0 * kMargin + (max_y - min_y) * vp.scale + 40.0;

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
    << fmt(width) << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 "
    << fmt(width) << ' ' << fmt(height) << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto ray = [&](double dir, const char* cls, const char* style) {
    const Point end = apex + reach * unit_vector(Angle(dir));
    o << "<line class=\"" << cls << "\" x1=\"" << fmt(vp.sx(apex.x))
      << "\" y1=\"" << fmt(vp.sy(apex.y)) << "\" x2=\"" << fmt(vp.sx(end.x))
      << "\" y2=\"" << fmt(vp.sy(end.y)) << "\" " << style << "/>\n";
  };

  if (options.breakpoints) {
    for (double b : scene.breakpoints()) {
      ray(b, "breakpoint", "stroke=\"#999999\" stroke-width=\"0.4\"");
    }
  }
  for (double a : scene.order().angles) {
    ray(a, "section-ray",
        "stroke=\"#555555\" stroke-width=\"0.8\" stroke-dasharray=\"5 4\"");
  }

  o << "<polygon class=\"polygon\" points=\"";
  for (std::size_t i = 0; i < verts.size(); ++i) {
    o << (i ? " " : "") << vp.xy(verts[i]);
  }
  o << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  const Point a0 = apex + reach * unit_vector(Angle(t0));
  const Point a1 = apex + reach * unit_vector(Angle(t1));
  const double r = reach * vp.scale;
  // Counter-clockwise in the world is clockwise on screen: sweep flag 0.
  o << "<path id=\"optimal-sector\" class=\"sector\" d=\"M " << vp.xy(apex)
    << " L " << vp.xy(a0) << " A " << fmt(r) << ' ' << fmt(r) << " 0 0 0 "
    << vp.xy(a1) << " Z\" fill=\"#1f77b4\" fill-opacity=\"0.25\" "
    << "stroke=\"#1f77b4\" stroke-width=\"1\"/>\n";

  o << "<circle class=\"apex\" cx=\"" << fmt(vp.sx(apex.x)) << "\" cy=\""
    << fmt(vp.sy(apex.y)) << "\" r=\"3.5\" fill=\"black\"/>\n";

  o << "<text class=\"label\" x=\"" << fmt(kMargin) << "\" y=\""
    << fmt(height - 14.0)
    << "\" font-family=\"monospace\" font-size=\"13\">theta* = "
    << fmt_label(result.theta_star) << " rad, area = " << fmt_label(result.area)
    << "</text>\n";

  if (options.profile_samples >= 2) {
    const Interval dom = scene.domain();
    const int n = options.profile_samples;
    std::vector<double> ts(n), as(n);
    double amax = 0.0;
    for (int k = 0; k < n; ++k) {
      ts[k] = k + 1 == n ? dom.hi : dom.lo + dom.width() * k / (n - 1);
      as[k] = clip_area_at(scene.polygon(), apex, Angle(ts[k]), Angle(scene.phi()));
      amax = std::max(amax, as[k]);
    }
    if (amax <= 0.0) amax = 1.0;
    const double x0 = width - kInsetW - 8.0;
    const double y0 = 8.0;
    o << "<g class=\"profile\">\n"
      << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\""
      << fmt(kInsetW) << "\" height=\"" << fmt(kInsetH)
      << "\" fill=\"white\" stroke=\"#333333\" stroke-width=\"0.8\"/>\n"
      << "<polyline class=\"profile-curve\" fill=\"none\" stroke=\"#d62728\" "
         "stroke-width=\"1\" points=\"";
    for (int k = 0; k < n; ++k) {
      const double px = x0 + 4.0 + (kInsetW - 8.0) * (ts[k] - dom.lo) / dom.width();
      const double py = y0 + kInsetH - 4.0 - (kInsetH - 8.0) * as[k] / amax;
      o << (k ? " " : "") << fmt(px) << ',' << fmt(py);
    }
    o << "\"/>\n</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace fovmax
