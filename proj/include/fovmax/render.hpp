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

// SVG 1.1 picture of a solved scene.

#include <string>

#include "fovmax/partition.hpp"
#include "fovmax/solver.hpp"

namespace fovmax {

struct RenderOptions {
  bool breakpoints = true;
  /// Samples of the area profile drawn as an inset; 0 disables it.
  int profile_samples = 0;
};

/// Deterministic for a fixed scene, result and options.
std::string render_svg(const ScenePartition& scene, const SolveResult& result,
                       const RenderOptions& options = {});

}  // namespace fovmax
