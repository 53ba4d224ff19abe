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

#ifndef VTLAB_ANALYSIS_H_
#define VTLAB_ANALYSIS_H_

// Need-buffer analysis: per-page statistics gathered into the page table's
// scratch fields, plus global hit and miss counts.

#include <cstdint>
#include <vector>

#include "vtlab/page.h"
#include "vtlab/raster.h"
#include "vtlab/render.h"
#include "vtlab/runtime.h"

namespace vtlab {

struct ScreenPoint {
  double x = 0.0;
  double y = 0.0;
};

inline ScreenPoint ScreenMidpoint(Viewport viewport) {
  return {0.5 * viewport.width, 0.5 * viewport.height};
}

inline constexpr double kDefaultWeightFloor = 0.05;

// max(floor, 1 - r / r_max) where r is the distance from `p` to `center`
// and r_max is half the viewport diagonal.
double CenterWeight(ScreenPoint p, ScreenPoint center, Viewport viewport,
                    double floor = kDefaultWeightFloor);

struct PageStats {
  PageId id;
  uint64_t abs = 0;
  uint32_t pixel_count = 0;
  double weighted_pixels = 0.0;  // sum of CenterWeight over pixel centers
  double distance_sum = 0.0;     // sum of view depths
  bool resident = false;         // resident at its own mip

  double mean_distance() const {
    return pixel_count == 0 ? 0.0 : distance_sum / pixel_count;
  }
};

struct NeedAnalysis {
  std::vector<PageStats> pages;  // ascending absolute index
  uint64_t hits = 0;
  uint64_t misses = 0;
};

// Accumulates statistics in `table`'s scratch (cleared first) and returns
// every needed page. `center` drives the weighted pixel sums.
NeedAnalysis Analyze(const FrameBuffers& frame, PageTable& table,
                     ScreenPoint center);

}  // namespace vtlab

#endif  // VTLAB_ANALYSIS_H_
