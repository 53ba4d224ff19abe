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

#include "vtlab/heuristics.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "vtlab/error.h"

namespace vtlab {

std::string HeuristicName(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::kRandom:
      return "random";
    case HeuristicKind::kPixelSum:
      return "pixelsum";
    case HeuristicKind::kDistance:
      return "distance";
    case HeuristicKind::kWeightedPixel:
      return "weightedpixel";
    case HeuristicKind::kHotSpot:
      return "hotspot";
  }
  return "unknown";
}

HeuristicKind ParseHeuristic(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (HeuristicKind kind :
       {HeuristicKind::kRandom, HeuristicKind::kPixelSum, HeuristicKind::kDistance,
        HeuristicKind::kWeightedPixel, HeuristicKind::kHotSpot}) {
    if (HeuristicName(kind) == lower) return kind;
  }
  throw VtError(ErrorCode::kConfig, "unknown heuristic '" + name + "'");
}

void HeuristicConfig::Validate() const {
  if (!(lookahead_weight >= 0.0 && lookahead_weight <= 1.0)) {
    throw VtError(ErrorCode::kConfig, "lookahead_weight must lie in [0, 1]");
  }
  if (!(hotspot_gain > 0.0)) {
    throw VtError(ErrorCode::kConfig, "hotspot_gain must be positive");
  }
  if (lookahead_damping && !(*lookahead_damping >= 0.0)) {
    throw VtError(ErrorCode::kConfig, "lookahead_damping must be non-negative");
  }
}

namespace {

uint64_t SplitMix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double RandomPriority(uint64_t seed, uint64_t frame, uint64_t abs) {
  const uint64_t h = SplitMix(SplitMix(SplitMix(seed) ^ frame) ^ abs);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double Priority(const PageStats& stats, HeuristicKind kind, uint64_t seed,
                uint64_t frame) {
  switch (kind) {
    case HeuristicKind::kRandom:
      return RandomPriority(seed, frame, stats.abs);
    case HeuristicKind::kPixelSum:
      return stats.pixel_count;
    case HeuristicKind::kDistance:
      return 1.0 / (1.0 + stats.mean_distance());
    case HeuristicKind::kWeightedPixel:
    case HeuristicKind::kHotSpot:
      return stats.weighted_pixels;
  }
  return 0.0;
}

double AngleDelta(double from, double to) {
  double d = std::remainder(to - from, 2.0 * kPi);
  if (d <= -kPi) d += 2.0 * kPi;
  return d;
}

ScreenPoint HotSpotCenter(double delta_yaw, double delta_pitch, double gain,
                          Viewport viewport) {
  const auto shift = [gain](double delta) {
    if (delta == 0.0) return 0.0;
    const double amount = std::min(1.0, gain * std::abs(delta));
    return delta > 0.0 ? amount : -amount;
  };
  const ScreenPoint mid = ScreenMidpoint(viewport);
  return {mid.x + shift(delta_yaw) * 0.5 * viewport.width,
          mid.y - shift(delta_pitch) * 0.5 * viewport.height};
}

double FallbackNoise(const PageId& id, const NoiseTable& noise,
                     const PageTable& table) {
  const TextureMeta& meta = table.meta();
  const uint32_t fallback_mip = table.at(id).source_mip;
  double sum = 0.0;
  PageId page = id;
  while (page.mip > fallback_mip) {
    sum += noise.values.at(AbsIndex(page, meta.mip_count));
    page = *Parent(page);
  }
  return sum;
}

Camera LookaheadCamera(const Camera& current, const Camera& previous,
                       const std::optional<Camera>& two_back,
                       std::optional<double> damping) {
  const double d_yaw = AngleDelta(previous.yaw, current.yaw);
  const double d_pitch = current.pitch - previous.pitch;
  if (two_back && damping) {
    const double prev_yaw = AngleDelta(two_back->yaw, previous.yaw);
    const double prev_pitch = previous.pitch - two_back->pitch;
    if (std::abs(d_yaw - prev_yaw) > *damping ||
        std::abs(d_pitch - prev_pitch) > *damping) {
      return current;
    }
  }
  Camera out = current;
  out.position = current.position + (current.position - previous.position);
  out.yaw = current.yaw + d_yaw;
  out.pitch = current.pitch + d_pitch;
  return out;
}

PriorityMap MergePriorities(const PriorityMap& primary,
                            const PriorityMap& lookahead, double weight) {
  PriorityMap out = primary;
  if (weight == 0.0) return out;
  for (const auto& [abs, priority] : lookahead) out[abs] += weight * priority;
  return out;
}

}  // namespace vtlab
