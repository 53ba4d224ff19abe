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

#ifndef VTLAB_SIMULATE_H_
#define VTLAB_SIMULATE_H_

// Budgeted streaming simulation. Each frame renders through the cache,
// analyzes what was missing, ranks the missing pages and loads at most
// `budget` of them before the next frame.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "vtlab/camera.h"
#include "vtlab/heuristics.h"
#include "vtlab/image.h"
#include "vtlab/raster.h"
#include "vtlab/sampler.h"
#include "vtlab/scene.h"
#include "vtlab/stream_queue.h"
#include "vtlab/vtx_file.h"

namespace vtlab {

struct SimConfig {
  uint32_t budget = 5;  // pages loaded per frame
  // Loaded (not locked) before the first frame: every page of mips
  // [0, initial_mips) and, optionally, every page frame 0 needs.
  uint32_t initial_mips = 3;
  bool preload_visible = true;
  uint32_t lock_mips = 0;
  AncestorStrategy ancestor = AncestorStrategy::kNone;
  bool noise_skip = false;
  // Pages dispatched in frame f become usable in frame f + 1 + latency.
  uint32_t latency = 0;
  uint32_t frames_x = 32;
  uint32_t frames_y = 32;
  FilterMode filter = FilterMode::kNearest;

  // Throws kConfig for a zero budget or an empty cache.
  void Validate() const;
};

struct StreamLogEntry {
  uint64_t frame = 0;
  uint64_t abs = 0;
  uint32_t mip = 0;
  double priority = 0.0;
  friend bool operator==(const StreamLogEntry&, const StreamLogEntry&) = default;
};

struct FrameStats {
  uint64_t hits = 0;
  uint64_t misses = 0;
  uint32_t loads = 0;
  uint32_t resident = 0;
};

struct SimResult {
  std::vector<RgbImage> frames;
  std::vector<FrameStats> stats;
  std::vector<StreamLogEntry> log;
};

struct SimInputs {
  const SceneMesh* scene = nullptr;
  const std::vector<Camera>* path = nullptr;
  Viewport viewport;
  const PageSource* source = nullptr;
  // Required when noise scaling or noise skipping is enabled.
  const NoiseTable* noise = nullptr;
};

// Called after each frame is rendered; lets callers stream frames out
// instead of keeping them. When set, SimResult::frames stays empty.
using FrameSink = std::function<void(uint64_t frame, const RgbImage& color)>;

SimResult Simulate(const SimInputs& inputs, const SimConfig& config,
                   const HeuristicConfig& heuristic, const FrameSink& sink = {});

// CSV with header frame,p_abs,mip,priority,heuristic.
void WriteStreamLog(std::ostream& out, const std::vector<StreamLogEntry>& log,
                    const std::string& heuristic);

}  // namespace vtlab

#endif  // VTLAB_SIMULATE_H_
