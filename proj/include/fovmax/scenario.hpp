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

// Scenario documents and result records.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "fovmax/geometry.hpp"
#include "fovmax/oracle.hpp"
#include "fovmax/partition.hpp"
#include "fovmax/solver.hpp"

namespace fovmax {

struct Scenario {
  ConvexPolygon polygon;
  Point apex;
  Angle phi;
  double precision_digits = 8.0;
  std::optional<Interval> domain;
};

/// Throws ErrorKind::validation naming the violated invariant and
/// ErrorKind::unsupported when the apex is not strictly outside.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::filesystem::path& path);

/// Rounds to 12 significant digits so that records print identically.
double round12(double x);

struct RecordOptions {
  bool breakpoints = true;
  std::optional<double> runtime_ms;
};

nlohmann::ordered_json solve_record(const SolveResult& result,
                            const ScenePartition& scene,
                            const RecordOptions& options = {});

struct VerifyReport {
  GridScan scan;
  double delta_theta = 0.0;  // angular distance, radians
  double delta_area = 0.0;   // solver minus oracle
  bool passed = true;
};

/// Passes when |area - oracle area| <= 1e-6 * area.
VerifyReport verify_against_oracle(const Scenario& scenario,
                                   const SolveResult& result,
                                   const GridOptions& options);

nlohmann::ordered_json verify_record(const VerifyReport& report);

/// Single-line by default, two-space indentation when pretty.
std::string dump_record(const nlohmann::ordered_json& record, bool pretty);

}  // namespace fovmax
