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

// fovmax: direction of a fixed-apex sector maximizing its overlap with a
// convex polygon.
//
//   fovmax solve scene.json [--precision d] [--domain a,b] [--verify]
//   fovmax verify scene.json
//   fovmax oracle scene.json [--oracle-step s]
//   fovmax eval scene.json --theta t
//   fovmax render scene.json out.svg [--no-breakpoints] [--profile sweep]
//
// Exit codes: 0 ok, 2 invalid input, 3 unsupported configuration,
// 4 oracle disagreement.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fovmax/errors.hpp"
#include "fovmax/oracle.hpp"
#include "fovmax/partition.hpp"
#include "fovmax/render.hpp"
#include "fovmax/scenario.hpp"
#include "fovmax/solver.hpp"

using namespace fovmax;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitMismatch = 4;

struct Common {
  std::string scenario;
  std::optional<double> precision;
  std::vector<double> domain;
  bool pretty = false;
  bool serial = false;
};

struct Loaded {
  Scenario scenario;
  Precision precision;
};

Loaded load(const Common& c) {
  Scenario s = load_scenario(c.scenario);
  if (!c.domain.empty()) {
    if (c.domain.size() != 2 || !(c.domain[0] < c.domain[1])) {
      throw Error(ErrorKind::validation, "domain must satisfy a < b");
    }
    s.domain = Interval{c.domain[0], c.domain[1]};
  }
  const double digits = c.precision.value_or(s.precision_digits);
  if (!(digits > 1.0)) {
    throw Error(ErrorKind::validation, "precision_digits must exceed 1");
  }
  return {std::move(s), Precision(digits)};
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("scenario", c.scenario, "scenario JSON file")->required();
  app->add_option("--precision", c.precision, "target accuracy in digits");
  app->add_option("--domain", c.domain, "direction domain a,b in radians")
      ->delimiter(',')
      ->expected(2);
  app->add_flag("--pretty", c.pretty, "indented output");
  app->add_flag("--serial", c.serial, "disable per-cell parallelism");
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::unsupported:
    case ErrorKind::degenerate:
      return kExitUnsupported;
    default:
      return kExitInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-overlap direction of a sector and a convex polygon"};
  app.require_subcommand(1);

  Common solve_c;
  bool verify = false;
  bool no_breakpoints = false;
  bool no_timing = false;
  double oracle_step = 1e-4;
  int refine_rounds = 3;
  auto* solve = app.add_subcommand("solve", "solve a scenario");
  add_common(solve, solve_c);
  solve->add_flag("--verify", verify, "cross-check against the grid oracle");
  solve->add_option("--oracle-step", oracle_step, "oracle grid step (rad)")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--no-breakpoints", no_breakpoints, "omit breakpoints");
  solve->add_flag("--no-timing", no_timing, "omit runtime_ms");

  Common verify_c;
  double verify_step = 1e-4;
  auto* verify_cmd = app.add_subcommand("verify", "solve and cross-check");
  add_common(verify_cmd, verify_c);
  verify_cmd->add_option("--oracle-step", verify_step, "oracle grid step (rad)")
      ->check(CLI::PositiveNumber);

  Common oracle_c;
  double grid_step = 1e-4;
  auto* oracle = app.add_subcommand("oracle", "dense-grid reference maximum");
  add_common(oracle, oracle_c);
  oracle->add_option("--oracle-step", grid_step, "grid step (rad)")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--refine-rounds", refine_rounds, "10x refinement rounds")
      ->check(CLI::NonNegativeNumber);

  Common eval_c;
  double eval_theta = 0.0;
  auto* eval = app.add_subcommand("eval", "area at a fixed direction");
  add_common(eval, eval_c);
  eval->add_option("--theta", eval_theta, "direction (rad)")->required();

  Common render_c;
  std::string svg_path;
  std::string profile;
  int samples = 360;
  bool render_no_bp = false;
  auto* render = app.add_subcommand("render", "write an SVG picture");
  add_common(render, render_c);
  render->add_option("out", svg_path, "output SVG file")->required();
  render->add_flag("--no-breakpoints", render_no_bp, "omit breakpoint lines");
  render->add_option("--profile", profile, "area profile inset")
      ->check(CLI::IsMember({"sweep"}));
  render->add_option("--samples", samples, "profile samples")
      ->check(CLI::Range(2, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  try {
    if (solve->parsed() || verify_cmd->parsed()) {
      const Common& c = solve->parsed() ? solve_c : verify_c;
      const bool check = verify || verify_cmd->parsed();
      const double step = solve->parsed() ? oracle_step : verify_step;
      const Loaded in = load(c);
      const auto exec = c.serial ? Execution::serial : Execution::parallel;

      const auto start = std::chrono::steady_clock::now();
      const ScenePartition scene(in.scenario.polygon, in.scenario.apex,
                                 in.scenario.phi, in.scenario.domain);
      const SolveResult r = maximize_global(scene, in.precision, exec);
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;

      RecordOptions ro;
      ro.breakpoints = !no_breakpoints && solve->parsed();
      if (!no_timing) ro.runtime_ms = elapsed.count();
      auto rec = solve_record(r, scene, ro);
      int rc = 0;
      if (check) {
        GridOptions go;
        go.step = step;
        go.exec = exec;
        const VerifyReport report = verify_against_oracle(in.scenario, r, go);
        rec["verify"] = verify_record(report);
        if (!report.passed) rc = kExitMismatch;
      }
      std::cout << dump_record(rec, c.pretty) << '\n';
      return rc;
    }

    if (oracle->parsed()) {
      const Loaded in = load(oracle_c);
      GridOptions go;
      go.step = grid_step;
      go.refine_rounds = refine_rounds;
      go.domain = in.scenario.domain;
      go.exec = oracle_c.serial ? Execution::serial : Execution::parallel;
      const GridScan g =
          grid_scan_max(in.scenario.polygon, in.scenario.apex, in.scenario.phi, go);
      nlohmann::ordered_json rec;
      rec["best_theta"] = round12(g.best_theta.radians());
      rec["best_area"] = round12(g.best_area);
      rec["step"] = g.step;
      rec["refine_rounds"] = g.refine_rounds;
      std::cout << dump_record(rec, oracle_c.pretty) << '\n';
      return 0;
    }

    if (eval->parsed()) {
      const Loaded in = load(eval_c);
      nlohmann::ordered_json rec;
      rec["theta"] = round12(eval_theta);
      rec["area"] = round12(clip_area_at(in.scenario.polygon, in.scenario.apex,
                                         Angle(eval_theta), in.scenario.phi));
      std::cout << dump_record(rec, eval_c.pretty) << '\n';
      return 0;
    }

    if (render->parsed()) {
      const Loaded in = load(render_c);
      const ScenePartition scene(in.scenario.polygon, in.scenario.apex,
                                 in.scenario.phi, in.scenario.domain);
      const auto exec = render_c.serial ? Execution::serial : Execution::parallel;
      const SolveResult r = maximize_global(scene, in.precision, exec);
      RenderOptions opt;
      opt.breakpoints = !render_no_bp;
      opt.profile_samples = profile == "sweep" ? samples : 0;
      std::ofstream out(svg_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << svg_path << '\n';
        return kExitInvalid;
      }
      out << render_svg(scene, r, opt);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  return 0;
}
