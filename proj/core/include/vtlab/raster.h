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

#ifndef VTLAB_RASTER_H_
#define VTLAB_RASTER_H_

// Deterministic CPU rasterizer. Produces, per pixel, the nearest surface with
// perspective-correct virtual texture coordinates and their screen-space
// derivatives taken over 2x2 pixel quads the way dFdx / dFdy are on a GPU.

#include <cstdint>
#include <vector>

#include "vtlab/camera.h"
#include "vtlab/scene.h"

namespace vtlab {

struct Viewport {
  int width = 0;
  int height = 0;

  // Throws kDomain unless both sides are positive and even.
  void Validate() const;
  friend bool operator==(const Viewport&, const Viewport&) = default;
};

struct Fragment {
  bool covered = false;
  uint32_t triangle = 0;
  double depth = 0.0;  // distance along the view direction
  double s = 0.0;
  double t = 0.0;
  // Quad finite differences. Pixels of the quad that the triangle does not
  // cover still get values extrapolated from the triangle's plane.
  double dsdx = 0.0;
  double dtdx = 0.0;
  double dsdy = 0.0;
  double dtdy = 0.0;
};

class FragmentBuffer {
 public:
  FragmentBuffer(Viewport viewport, double far_depth);

  const Viewport& viewport() const { return viewport_; }
  const Fragment& at(int x, int y) const {
    return fragments_[static_cast<size_t>(y) * viewport_.width + x];
  }
  Fragment& at(int x, int y) {
    return fragments_[static_cast<size_t>(y) * viewport_.width + x];
  }

 private:
  Viewport viewport_;
  std::vector<Fragment> fragments_;
};

// Perspective projection with near-plane clipping, no back-face culling,
// keep-nearest depth test (first triangle wins exact ties) and a top-left
// fill rule. Zero-area triangles are skipped. Pixels beyond `far` stay
// uncovered.
FragmentBuffer Rasterize(const SceneMesh& scene, const Camera& camera,
                         Viewport viewport);

}  // namespace vtlab

#endif  // VTLAB_RASTER_H_
