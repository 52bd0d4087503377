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

#include "fovmax/solver.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <vector>

#include "fovmax/analytic.hpp"
#include "fovmax/errors.hpp"

namespace fovmax {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kTieRelative = 1e-12;
constexpr int kFallbackSamples = 64;

struct Candidate {
  double theta;
  double area;
  double bracket;
  bool interior;
};

// Strictly better, or tied within tol at a smaller direction.
bool better(const Candidate& a, const Candidate& b, double tol) {
  if (a.area > b.area + tol) return true;
  if (a.area < b.area - tol) return false;
  return a.theta < b.theta;
}

double tie_tolerance(const ScenePartition& scene) {
  return kTieRelative * std::max(1.0, shoelace_area(scene.polygon()));
}

// Golden-section search on the clipped area. Used on chunks where the
// closed form cannot be assembled.
Candidate fallback_maximize(const ScenePartition& scene, Interval iv, double tol,
                            long& evaluations) {
  auto f = [&](double t) {
    ++evaluations;
    return clip_objective(scene, t);
  };
  const double step = iv.width() / kFallbackSamples;
  Candidate best{iv.lo, f(iv.lo), 0.0, false};
  const double area_tol = tie_tolerance(scene);
  for (int k = 1; k <= kFallbackSamples; ++k) {
    const double t = k == kFallbackSamples ? iv.hi : iv.lo + k * step;
    Candidate c{t, f(t), 0.0, false};
    if (better(c, best, area_tol)) best = c;
  }
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = std::max(iv.lo, best.theta - step);
  double b = std::min(iv.hi, best.theta + step);
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < kMaxIterations && b - a > tol; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  const double t = 0.5 * (a + b);
  Candidate c{t, f(t), b - a, t > iv.lo && t < iv.hi};
  if (better(c, best, area_tol)) best = c;
  return best;
}

// Closed-form value at a cell direction; clipping where it is near-singular.
double cell_value(const ScenePartition& scene, const RotationCell& cell,
                  double theta) {
  try {
    return cell_objective(scene, cell, theta);
  } catch (const Error&) {
    return clip_objective(scene, theta);
  }
}

}  // namespace

Precision::Precision(double digits) : digits_(digits) {
  if (!(digits > 1.0) || !std::isfinite(digits)) {
    throw Error(ErrorKind::validation, "precision must exceed 1 digit");
  }
  tolerance_ = std::pow(10.0, -digits);
}

std::optional<RootResult> safeguarded_root(const std::function<double(double)>& g,
                                           const std::function<double(double)>& dg,
                                           Interval bracket, Precision prec) {
  if (!(bracket.lo < bracket.hi)) {
    throw Error(ErrorKind::domain, "root bracket must satisfy lo < hi");
  }
  const double tol = prec.tolerance();
  double glo = g(bracket.lo);
  double ghi = g(bracket.hi);
  if (glo == 0.0) return RootResult{bracket.lo, 0.0, 0};
  if (ghi == 0.0) return RootResult{bracket.hi, 0.0, 0};
  if ((glo > 0.0) == (ghi > 0.0)) return std::nullopt;

  // neg/pos: endpoints with g < 0 and g > 0.
  double neg = glo < 0.0 ? bracket.lo : bracket.hi;
  double pos = glo < 0.0 ? bracket.hi : bracket.lo;
  double x = bracket.mid();
  double gx = g(x);
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    if (gx == 0.0) return RootResult{x, 0.0, it};
    if (gx < 0.0) neg = x; else pos = x;
    const double lo = std::min(neg, pos);
    const double hi = std::max(neg, pos);
    if (hi - lo < tol) break;

    const double d = dg(x);
    bool stepped = false;
    if (d != 0.0 && std::isfinite(d)) {
      const double xn = x - gx / d;
      if (xn > lo && xn < hi) {
        const double gn = g(xn);
        if (std::abs(gn) < std::abs(gx)) {
          const double step = std::abs(xn - x);
          x = xn;
          gx = gn;
          stepped = true;
          // A tiny Newton step: confirm a sign change across a tol-wide
          // bracket around x and finish there.
          if (step < 0.25 * tol && gx != 0.0) {
            const double a = std::max(lo, x - 0.25 * tol);
            const double b = std::min(hi, x + 0.25 * tol);
            if (a < b) {
              const double ga = g(a), gb = g(b);
              if ((ga > 0.0) != (gb > 0.0)) {
                return RootResult{x, b - a, it + 1};
              }
            }
          }
        }
      }
    }
    if (!stepped) {
      const double m = 0.5 * (lo + hi);
      if (m <= lo || m >= hi) break;  // no representable progress
      x = m;
      gx = g(x);
    }
  }
  const double lo = std::min(neg, pos);
  const double hi = std::max(neg, pos);
  return RootResult{0.5 * (lo + hi), hi - lo, it};
}

SolveResult maximize_cell(const ScenePartition& scene, const RotationCell& cell,
                          Precision prec) {
  SolveResult out;
  const Interval iv = cell.interval;
  const double area_tol = tie_tolerance(scene);
  long evaluations = 0;
  long iterations = 0;

  if (cell.empty) {
    out.theta_star = iv.lo;
    out.area = 0.0;
    return out;
  }
  if (cell.constant()) {
    out.theta_star = iv.lo;
    out.area = clip_objective(scene, iv.lo);
    out.candidates_evaluated = 1;
    return out;
  }
  if (cell.degenerate) {
    const Candidate c = fallback_maximize(scene, iv, prec.tolerance(), evaluations);
    out.theta_star = c.theta;
    out.area = c.area;
    out.achieved_bracket = c.bracket;
    out.interior = c.interior;
    out.candidates_evaluated = evaluations;
    return out;
  }

  const double phi = scene.phi();
  const auto chunks =
      static_cast<long>(std::max(1.0, std::ceil(iv.width() / phi - 1e-12)));
  const double chunk_len = iv.width() / static_cast<double>(chunks);
  const std::optional<StaticWedge> left =
      cell.left_section ? cell.left_wedge : std::nullopt;
  const std::optional<StaticWedge> right =
      cell.right_section ? cell.right_wedge : std::nullopt;

  std::optional<Candidate> best;
  auto offer = [&](const Candidate& c) {
    ++evaluations;
    if (!best || better(c, *best, area_tol)) best = c;
  };

  double start_area = cell_value(scene, cell, iv.lo);
  offer({iv.lo, start_area, 0.0, false});
  for (long k = 0; k < chunks; ++k) {
    const double c0 = iv.lo + static_cast<double>(k) * chunk_len;
    const double c1 = k + 1 == chunks ? iv.hi : c0 + chunk_len;
    const double len = c1 - c0;
    const double end_area = cell_value(scene, cell, c1);
    offer({c1, end_area, 0.0, false});

    std::optional<CellPieces> pieces;
    try {
      pieces.emplace(left, right, Angle(c0), Angle(phi), start_area);
    } catch (const Error&) {
      pieces.reset();
    }
    if (!pieces) {
      offer(fallback_maximize(scene, {c0, c1}, prec.tolerance(), evaluations));
      start_area = end_area;
      continue;
    }

    std::vector<double> cuts{0.0};
    for (double e : pieces->piece_extrema(len)) cuts.push_back(e);
    cuts.push_back(len);

    const auto g = [&](double d) { return pieces->derivative(d); };
    const auto dg = [&](double d) { return pieces->second_derivative(d); };
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
      const double a = cuts[s];
      const double b = cuts[s + 1];
      if (!(b > a)) continue;
      // Only a fall from positive to negative is a local maximum.
      if (!(g(a) > 0.0 && g(b) < 0.0)) continue;
      const auto root = safeguarded_root(g, dg, {a, b}, prec);
      if (!root) continue;
      iterations += root->iterations;
      double value;
      try {
        value = pieces->evaluate(root->root);
      } catch (const Error&) {
        value = clip_objective(scene, c0 + root->root);
      }
      offer({c0 + root->root, value, root->bracket, true});
    }
    start_area = end_area;
  }

  out.theta_star = best->theta;
  out.area = best->area;
  out.achieved_bracket = best->bracket;
  out.interior = best->interior;
  out.candidates_evaluated = evaluations;
  out.newton_iterations = iterations;
  return out;
}

SolveResult maximize_global(const ConvexPolygon& poly, Point apex, Angle phi,
                            Precision prec, std::optional<Interval> domain,
                            Execution exec) {
  const ScenePartition scene(poly, apex, phi, domain);
  return maximize_global(scene, prec, exec);
}

SolveResult maximize_global(const ScenePartition& scene, Precision prec,
                            Execution exec) {
  const auto& cells = scene.cells();
  if (cells.empty()) {
    throw Error(ErrorKind::domain, "direction domain does not meet the polygon");
  }
  const double area_tol = tie_tolerance(scene);
  const auto n = static_cast<long>(cells.size());

  // The opening covers the whole angular span: the smallest containing
  // direction wins outright.
  const auto& rays = scene.order().angles;
  const Interval dom = scene.domain();
  const double contain_lo = std::max(rays.back() - scene.phi(), dom.lo);
  const double contain_hi = std::min(rays.front(), dom.hi);
  if (contain_lo <= contain_hi + kAngleEps) {
    SolveResult out;
    out.theta_star = contain_lo;
    out.area = clip_objective(scene, contain_lo);
    out.num_cells = n;
    out.candidates_evaluated = 1;
    out.cell_index = n - 1;
    for (long i = 0; i < n; ++i) {
      if (cells[i].interval.hi > contain_lo + kAngleEps) {
        out.cell_index = i;
        break;
      }
    }
    out.theta_star = normalize_angle(out.theta_star);
    return out;
  }

  std::vector<SolveResult> local(cells.size());

  if (exec == Execution::serial) {
    for (long i = 0; i < n; ++i) local[i] = maximize_cell(scene, cells[i], prec);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        local[i] = maximize_cell(scene, cells[i], prec);
      } catch (...) {
#pragma omp critical(fovmax_solver_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  // Reduction in cell order, so the result does not depend on scheduling.
  SolveResult out = local.front();
  out.cell_index = 0;
  long evaluations = 0;
  long iterations = 0;
  for (long i = 0; i < n; ++i) {
    const SolveResult& r = local[i];
    evaluations += r.candidates_evaluated;
    iterations += r.newton_iterations;
    const Candidate c{r.theta_star, r.area, 0.0, false};
    const Candidate b{out.theta_star, out.area, 0.0, false};
    if (i > 0 && better(c, b, area_tol)) {
      out = r;
      out.cell_index = i;
    }
  }
  out.num_cells = n;
  out.candidates_evaluated = evaluations;
  out.newton_iterations = iterations;
  out.area = clip_objective(scene, out.theta_star);
  out.theta_star = normalize_angle(out.theta_star);
  return out;
}

}  // namespace fovmax
