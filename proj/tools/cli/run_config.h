// Copyright 2026 The vtlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VTLAB_TOOLS_CLI_RUN_CONFIG_H_
#define VTLAB_TOOLS_CLI_RUN_CONFIG_H_

// Declarative run configuration for the vtlab command-line tool.
//
//   {
//     "texture": "textures/level.vtx",
//     "noise": "textures/level.vtn",
//     "scene": "scene.json",
//     "path": "flythrough.txt",
//     "out": "runs/pixelsum",
//     "viewport": [256, 256],
//     "filter": "nearest",
//     "seed": 1,
//     "camera": {"fov_deg": 60, "near": 0.05, "far": 1000},
//     "sim": {"budget": 5, "initial_mips": 3, "preload_visible": true,
//             "lock_mips": 0, "ancestor": "none", "noise_skip": false,
//             "latency": 0, "cache_frames": [32, 32]},
//     "heuristic": {"kind": "pixelsum", "noise_scaling": false,
//                   "lookahead": false, "lookahead_weight": 0.5,
//                   "lookahead_damping_deg": null, "hotspot_gain": null},
//     "ssim": {"window": 8, "stride": 1, "k1": 0.01, "k2": 0.03,
//              "weight_floor": 0.05}
//   }
//
// Every key is optional. Relative paths are resolved against the directory
// of the config file. Unknown keys are rejected so typos surface early.

#include <cstdint>
#include <filesystem>
#include <string>

#include "vtlab/camera.h"
#include "vtlab/heuristics.h"
#include "vtlab/metrics.h"
#include "vtlab/raster.h"
#include "vtlab/sampler.h"
#include "vtlab/simulate.h"

namespace vtlab::cli {

struct RunConfig {
  std::filesystem::path texture;
  std::filesystem::path noise;
  std::filesystem::path scene;
  std::filesystem::path camera_path;
  std::filesystem::path out;
  Viewport viewport{256, 256};
  FilterMode filter = FilterMode::kNearest;
  Camera lens;
  uint64_t seed = 0;
  SimConfig sim;
  HeuristicConfig heuristic;
  SsimParams ssim;
};

// Throws VtError(kConfig) naming the offending field.
RunConfig ParseRunConfig(const std::string& json_text,
                         const std::filesystem::path& base_dir);
RunConfig LoadRunConfig(const std::filesystem::path& path);

// Checks that everything a render needs is set and exists: texture, scene,
// camera path, a valid viewport and lens.
void ValidateForRender(const RunConfig& config);
// ValidateForRender plus the simulation settings; a NoiseValue sidecar is
// required when noise scaling or noise skipping is enabled.
void ValidateForSimulation(const RunConfig& config);

}  // namespace vtlab::cli

#endif  // VTLAB_TOOLS_CLI_RUN_CONFIG_H_
