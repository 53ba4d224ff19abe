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

#include "vtlab/analysis.h"

#include <algorithm>
#include <cmath>

namespace vtlab {

double CenterWeight(ScreenPoint p, ScreenPoint center, Viewport viewport,
                    double floor) {
  const double r_max =
      0.5 * std::hypot(static_cast<double>(viewport.width),
                       static_cast<double>(viewport.height));
  const double r = std::hypot(p.x - center.x, p.y - center.y);
  return std::max(floor, 1.0 - r / r_max);
}

NeedAnalysis Analyze(const FrameBuffers& frame, PageTable& table,
                     ScreenPoint center) {
  table.ClearScratch();
  const TextureMeta& meta = table.meta();
  const Viewport vp = frame.viewport;
  NeedAnalysis out;
  std::vector<uint64_t> touched;
  for (int y = 0; y < vp.height; ++y) {
    for (int x = 0; x < vp.width; ++x) {
      const size_t i = frame.index(x, y);
      const auto& need = frame.need[i];
      if (!need) continue;
      const uint64_t abs = AbsIndex(*need, meta.mip_count);
      PageTableEntry& entry = table[abs];
      if (!entry.needed) {
        entry.needed = true;
        touched.push_back(abs);
      }
      ++entry.pixel_count;
      entry.weighted_pixels += CenterWeight({x + 0.5, y + 0.5}, center, vp);
      entry.distance_sum += frame.depth[i];
      if (entry.resident) {
        ++out.hits;
      } else {
        ++out.misses;
      }
    }
  }
  std::sort(touched.begin(), touched.end());
  out.pages.reserve(touched.size());
  for (uint64_t abs : touched) {
    const PageTableEntry& entry = table[abs];
    PageStats stats;
    stats.id = FromAbs(abs, meta.mip_count);
    stats.abs = abs;
    stats.pixel_count = entry.pixel_count;
    stats.weighted_pixels = entry.weighted_pixels;
    stats.distance_sum = entry.distance_sum;
    stats.resident = entry.resident;
    out.pages.push_back(stats);
  }
  return out;
}

}  // namespace vtlab
