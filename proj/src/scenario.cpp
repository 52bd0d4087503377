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

#include "fovmax/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <vector>

#include "fovmax/errors.hpp"

namespace fovmax {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::validation, what);
}

double number(const nlohmann::json& v, const char* field) {
  if (!v.is_number()) invalid(std::string(field) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) invalid(std::string(field) + " must be finite");
  return x;
}

Point point(const nlohmann::json& v, const char* field) {
  if (!v.is_array() || v.size() != 2) {
    invalid(std::string(field) + " must be a pair [x, y]");
  }
  return Point(number(v[0], field), number(v[1], field));
}

}  // namespace

Scenario parse_scenario(const nlohmann::json& doc) {
  if (!doc.is_object()) invalid("scenario must be a JSON object");
  for (const char* key : {"polygon", "apex", "phi"}) {
    if (!doc.contains(key)) invalid(std::string("missing field '") + key + "'");
  }
  const auto& pv = doc.at("polygon");
  if (!pv.is_array()) invalid("polygon must be a list of [x, y]");
  std::vector<Point> pts;
  pts.reserve(pv.size());
  for (const auto& v : pv) pts.push_back(point(v, "polygon vertex"));

  const double phi = number(doc.at("phi"), "phi");
  if (!(phi > 0.0 && phi < kPi)) invalid("phi must lie in (0, pi)");

  Scenario s{ConvexPolygon(std::move(pts)), point(doc.at("apex"), "apex"),
             Angle(phi), 8.0, std::nullopt};
  if (doc.contains("precision_digits")) {
    s.precision_digits = number(doc.at("precision_digits"), "precision_digits");
    if (!(s.precision_digits > 1.0)) invalid("precision_digits must exceed 1");
  }
  if (doc.contains("domain") && !doc.at("domain").is_null()) {
    const auto& d = doc.at("domain");
    if (!d.is_array() || d.size() != 2) invalid("domain must be a pair [a, b]");
    const Interval iv{number(d[0], "domain"), number(d[1], "domain")};
    if (!(iv.lo < iv.hi)) invalid("domain must satisfy a < b");
    s.domain = iv;
  }
  if (!s.polygon.strictly_outside(s.apex)) {
    throw Error(ErrorKind::unsupported, "apex inside or on polygon");
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot read scenario file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    invalid(std::string("malformed scenario JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

double round12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json solve_record(const SolveResult& result,
                            const ScenePartition& scene,
                            const RecordOptions& options) {
  nlohmann::ordered_json rec;
  rec["theta_star"] = round12(result.theta_star);
  rec["area"] = round12(result.area);
  rec["cell_index"] = result.cell_index;
  rec["num_cells"] = result.num_cells;
  if (options.breakpoints) {
    auto bp = nlohmann::json::array();
    for (double b : scene.breakpoints()) bp.push_back(round12(b));
    rec["breakpoints"] = bp;
  }
  if (options.runtime_ms) rec["runtime_ms"] = round12(*options.runtime_ms);
  return rec;
}

VerifyReport verify_against_oracle(const Scenario& scenario,
                                   const SolveResult& result,
                                   const GridOptions& options) {
  VerifyReport r;
  GridOptions opt = options;
  if (!opt.domain) opt.domain = scenario.domain;
  r.scan = grid_scan_max(scenario.polygon, scenario.apex, scenario.phi, opt);
  const double d = std::abs(result.theta_star - r.scan.best_theta.radians());
  r.delta_theta = std::min(d, kTwoPi - d);
  r.delta_area = result.area - r.scan.best_area;
  r.passed = std::abs(r.delta_area) <= 1e-6 * result.area;
  return r;
}

nlohmann::ordered_json verify_record(const VerifyReport& report) {
  nlohmann::ordered_json rec;
  rec["oracle_theta"] = round12(report.scan.best_theta.radians());
  rec["oracle_area"] = round12(report.scan.best_area);
  rec["delta_theta"] = round12(report.delta_theta);
  rec["delta_area"] = round12(report.delta_area);
  rec["passed"] = report.passed;
  return rec;
}

std::string dump_record(const nlohmann::ordered_json& record, bool pretty) {
  return record.dump(pretty ? 2 : -1);
}

}  // namespace fovmax
