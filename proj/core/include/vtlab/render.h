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

#ifndef VTLAB_RENDER_H_
#define VTLAB_RENDER_H_

// One frame of the emulated virtual-texturing shader: color, depth and the
// need buffer naming the page each pixel wants.

#include <optional>
#include <vector>

#include "vtlab/camera.h"
#include "vtlab/image.h"
#include "vtlab/page.h"
#include "vtlab/raster.h"
#include "vtlab/sampler.h"
#include "vtlab/scene.h"

namespace vtlab {

using NeedBuffer = std::vector<std::optional<PageId>>;

struct FrameBuffers {
  Viewport viewport;
  RgbImage color;             // black where nothing is covered
  std::vector<double> depth;  // camera.far where nothing is covered
  NeedBuffer need;            // page at the wanted mip, not the one sampled

  size_t index(int x, int y) const {
    return static_cast<size_t>(y) * viewport.width + x;
  }
};

FrameBuffers RenderFrame(const SceneMesh& scene, const Camera& camera,
                         Viewport viewport, const TextureSampler& sampler,
                         FilterMode filter);

// Depth and need buffer only; used for prediction passes and preloading.
FrameBuffers RenderNeed(const SceneMesh& scene, const Camera& camera,
                        Viewport viewport, const TextureMeta& meta);

}  // namespace vtlab

#endif  // VTLAB_RENDER_H_
