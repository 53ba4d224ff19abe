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

#ifndef VTLAB_HEURISTICS_H_
#define VTLAB_HEURISTICS_H_

// Page priority heuristics, NoiseValue scaling and the LookAhead camera.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "vtlab/analysis.h"
#include "vtlab/camera.h"
#include "vtlab/page.h"
#include "vtlab/runtime.h"
#include "vtlab/vtx_file.h"

namespace vtlab {

enum class HeuristicKind { kRandom, kPixelSum, kDistance, kWeightedPixel, kHotSpot };

std::string HeuristicName(HeuristicKind kind);
// Names are case-insensitive: random, pixelsum, distance, weightedpixel,
// hotspot. Throws kConfig otherwise.
HeuristicKind ParseHeuristic(const std::string& name);

// A 5 degree per frame turn moves the HotSpot all the way to the border.
inline const double kDefaultHotSpotGain = 1.0 / DegToRad(5.0);

struct HeuristicConfig {
  HeuristicKind kind = HeuristicKind::kPixelSum;
  uint64_t seed = 0;
  double hotspot_gain = kDefaultHotSpotGain;
  bool noise_scaling = false;
  bool lookahead = false;
  double lookahead_weight = 0.5;
  // When set, a LookAhead pass whose change in rotation speed (radians per
  // frame, either axis) exceeds this value uses the current camera instead.
  std::optional<double> lookahead_damping;

  // Throws kConfig for weights outside [0, 1] or non-positive gain.
  void Validate() const;
};

// Absolute page index -> priority. Ordered so every pass over it is
// deterministic.
using PriorityMap = std::map<uint64_t, double>;

// Uniform in [0, 1), a pure function of (seed, frame, page).
double RandomPriority(uint64_t seed, uint64_t frame, uint64_t abs);

// Priority of one page. WeightedPixel and HotSpot both read the weighted
// pixel sum; they differ only in the center the analysis used.
double Priority(const PageStats& stats, HeuristicKind kind, uint64_t seed,
                uint64_t frame);

// Shortest signed angle from `from` to `to`, in (-pi, pi].
double AngleDelta(double from, double to);

// Screen point the HotSpot weighting is centered on. Turning right moves it
// toward the right edge and looking up toward the top edge; each axis
// saturates at the border once gain * |delta| reaches 1.
ScreenPoint HotSpotCenter(double delta_yaw, double delta_pitch, double gain,
                          Viewport viewport);

// Sum of NoiseValues from `id` up to, but excluding, the resident page its
// entry currently falls back to. Zero for a resident page.
double FallbackNoise(const PageId& id, const NoiseTable& noise,
                     const PageTable& table);
inline double NoiseScale(double priority, const PageId& id,
                         const NoiseTable& noise, const PageTable& table) {
  return priority * FallbackNoise(id, noise, table);
}

// The current camera with the last frame's motion applied once more. With
// `two_back` and a damping threshold, a jump in rotation speed collapses the
// prediction to the current camera.
Camera LookaheadCamera(const Camera& current, const Camera& previous,
                       const std::optional<Camera>& two_back = std::nullopt,
                       std::optional<double> damping = std::nullopt);

// Union of both maps; pages in the lookahead map add weight * their
// lookahead priority.
PriorityMap MergePriorities(const PriorityMap& primary,
                            const PriorityMap& lookahead, double weight);

}  // namespace vtlab

#endif  // VTLAB_HEURISTICS_H_
