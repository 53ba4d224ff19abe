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

#include "vtlab/render.h"

namespace vtlab {
namespace {

FrameBuffers Shade(const SceneMesh& scene, const Camera& camera,
                   Viewport viewport, const TextureMeta& meta,
                   const TextureSampler* sampler, FilterMode filter) {
  const FragmentBuffer fragments = Rasterize(scene, camera, viewport);
  FrameBuffers out;
  out.viewport = viewport;
  if (sampler != nullptr) out.color = RgbImage(viewport.width, viewport.height);
  const size_t count = static_cast<size_t>(viewport.width) * viewport.height;
  out.depth.assign(count, camera.far);
  out.need.assign(count, std::nullopt);

  for (int y = 0; y < viewport.height; ++y) {
    for (int x = 0; x < viewport.width; ++x) {
      const Fragment& f = fragments.at(x, y);
      if (!f.covered) continue;
      const size_t i = out.index(x, y);
      out.depth[i] = f.depth;
      const MipSelection lod = ComputeMip(f.dsdx, f.dtdx, f.dsdy, f.dtdy,
                                          meta.dim_max(), meta.max_mip());
      out.need[i] = IdentifyPage(SnapCoord(f.s), SnapCoord(f.t), lod.page_mip);
      if (sampler != nullptr) {
        out.color.set(x, y, sampler->Sample(f.s, f.t, lod, filter));
      }
    }
  }
  return out;
}

}  // namespace

FrameBuffers RenderFrame(const SceneMesh& scene, const Camera& camera,
                         Viewport viewport, const TextureSampler& sampler,
                         FilterMode filter) {
  return Shade(scene, camera, viewport, sampler.meta(), &sampler, filter);
}

FrameBuffers RenderNeed(const SceneMesh& scene, const Camera& camera,
                        Viewport viewport, const TextureMeta& meta) {
  return Shade(scene, camera, viewport, meta, nullptr, FilterMode::kNearest);
}

}  // namespace vtlab
