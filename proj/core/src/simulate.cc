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

#include "vtlab/simulate.h"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <ostream>
#include <set>

#include "vtlab/analysis.h"
#include "vtlab/error.h"
#include "vtlab/render.h"
#include "vtlab/runtime.h"

namespace vtlab {

void SimConfig::Validate() const {
  if (budget == 0) throw VtError(ErrorCode::kConfig, "budget must be at least 1");
  if (frames_x == 0 || frames_y == 0) {
    throw VtError(ErrorCode::kConfig, "cache needs at least one frame");
  }
}

namespace {

struct Dispatch {
  uint64_t arrival = 0;
  PageId id;
};

// Resident page of the frame a needed page is served from.
PageId Occupant(const PageId& id, const PageTableEntry& entry) {
  const uint32_t shift = id.mip - entry.source_mip;
  return {entry.source_mip, id.x >> shift, id.y >> shift};
}

PriorityMap Prioritize(const NeedAnalysis& analysis, const HeuristicConfig& h,
                       uint64_t frame, const std::set<uint64_t>& in_flight) {
  PriorityMap out;
  for (const PageStats& stats : analysis.pages) {
    if (stats.resident || in_flight.count(stats.abs) != 0) continue;
    out[stats.abs] = Priority(stats, h.kind, h.seed, frame);
  }
  return out;
}

}  // namespace

SimResult Simulate(const SimInputs& inputs, const SimConfig& config,
                   const HeuristicConfig& heuristic, const FrameSink& sink) {
  if (inputs.scene == nullptr || inputs.path == nullptr ||
      inputs.source == nullptr) {
    throw VtError(ErrorCode::kConfig, "simulation needs a scene, path and texture");
  }
  config.Validate();
  heuristic.Validate();
  inputs.viewport.Validate();
  const SceneMesh& scene = *inputs.scene;
  const std::vector<Camera>& path = *inputs.path;
  const TextureMeta& meta = inputs.source->meta();
  const bool uses_noise = heuristic.noise_scaling || config.noise_skip;
  if (uses_noise && inputs.noise == nullptr) {
    throw VtError(ErrorCode::kConfig,
                  "noise scaling or skipping requires a NoiseValue table");
  }
  if (inputs.noise != nullptr && inputs.noise->size() != meta.total_pages()) {
    throw VtError(ErrorCode::kFormat,
                  "NoiseValue table does not match the texture's page count");
  }

  VirtualTextureRuntime runtime(*inputs.source, config.frames_x, config.frames_y);
  if (config.lock_mips > 0) runtime.LockMips(config.lock_mips);
  const uint64_t initial = TotalPages(std::min(config.initial_mips, meta.mip_count));
  for (uint64_t abs = 0; abs < initial; ++abs) {
    const PageId id = FromAbs(abs, meta.mip_count);
    if (!runtime.cache().IsResident(id)) runtime.Load(id);
  }
  if (config.preload_visible && !path.empty()) {
    const FrameBuffers first = RenderNeed(scene, path[0], inputs.viewport, meta);
    std::set<uint64_t> visible;
    for (const auto& need : first.need) {
      if (need) visible.insert(AbsIndex(*need, meta.mip_count));
    }
    for (uint64_t abs : visible) {
      const PageId id = FromAbs(abs, meta.mip_count);
      if (!runtime.cache().IsResident(id)) runtime.Load(id);
    }
  }
  runtime.Commit();

  const VirtualSampler sampler(runtime.cache(), runtime.indirection());
  const NoiseTable* skip = config.noise_skip ? inputs.noise : nullptr;
  const ScreenPoint midpoint = ScreenMidpoint(inputs.viewport);
  std::deque<Dispatch> pending;
  std::set<uint64_t> in_flight;
  SimResult result;
  result.stats.reserve(path.size());

  for (uint64_t f = 0; f < path.size(); ++f) {
    const Camera& camera = path[f];
    runtime.cache().BeginFrame();
    const FrameBuffers frame =
        RenderFrame(scene, camera, inputs.viewport, sampler, config.filter);
    if (sink) {
      sink(f, frame.color);
    } else {
      result.frames.push_back(frame.color);
    }

    ScreenPoint center = midpoint;
    if (heuristic.kind == HeuristicKind::kHotSpot && f > 0) {
      center = HotSpotCenter(AngleDelta(path[f - 1].yaw, camera.yaw),
                             camera.pitch - path[f - 1].pitch,
                             heuristic.hotspot_gain, inputs.viewport);
    }
    PageTable& table = runtime.page_table();
    const NeedAnalysis analysis = Analyze(frame, table, center);
    for (const PageStats& stats : analysis.pages) {
      runtime.cache().Touch(Occupant(stats.id, table[stats.abs]));
    }

    PriorityMap priorities = Prioritize(analysis, heuristic, f, in_flight);
    if (heuristic.lookahead && f > 0) {
      std::optional<Camera> two_back;
      if (f > 1) two_back = path[f - 2];
      const Camera predicted = LookaheadCamera(camera, path[f - 1], two_back,
                                               heuristic.lookahead_damping);
      const FrameBuffers ahead =
          RenderNeed(scene, predicted, inputs.viewport, meta);
      const NeedAnalysis ahead_analysis = Analyze(ahead, table, center);
      priorities =
          MergePriorities(priorities, Prioritize(ahead_analysis, heuristic, f, in_flight),
                          heuristic.lookahead_weight);
    }
    if (heuristic.noise_scaling) {
      for (auto& [abs, priority] : priorities) {
        priority = NoiseScale(priority, FromAbs(abs, meta.mip_count),
                              *inputs.noise, table);
      }
    }
    if (config.ancestor != AncestorStrategy::kNone) {
      priorities = AncestorClosure(priorities, table, skip);
      for (uint64_t abs : in_flight) priorities.erase(abs);
    }

    StreamQueue queue(config.ancestor, meta.mip_count);
    queue.Assign(priorities);
    FrameStats stats;
    stats.hits = analysis.hits;
    stats.misses = analysis.misses;
    while (stats.loads < config.budget) {
      const auto next = queue.Pop();
      if (!next) break;
      result.log.push_back({f, next->abs, next->id.mip, next->priority});
      pending.push_back({f + config.latency, next->id});
      in_flight.insert(next->abs);
      ++stats.loads;
    }
    while (!pending.empty() && pending.front().arrival <= f) {
      runtime.Load(pending.front().id);
      in_flight.erase(AbsIndex(pending.front().id, meta.mip_count));
      pending.pop_front();
    }
    runtime.Commit();
    stats.resident = runtime.cache().resident_count();
    result.stats.push_back(stats);
  }
  return result;
}

void WriteStreamLog(std::ostream& out, const std::vector<StreamLogEntry>& log,
                    const std::string& heuristic) {
  out << "frame,p_abs,mip,priority,heuristic\n";
  char priority[32];
  for (const StreamLogEntry& e : log) {
    std::snprintf(priority, sizeof(priority), "%.9g", e.priority);
    out << e.frame << ',' << e.abs << ',' << e.mip << ',' << priority << ','
        << heuristic << '\n';
  }
}

}  // namespace vtlab
