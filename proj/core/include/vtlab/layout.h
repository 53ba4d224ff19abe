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

#ifndef VTLAB_LAYOUT_H_
#define VTLAB_LAYOUT_H_

// Geometry retexturing: give every face of a scene its own region of one
// large texture. Each face's source texture is duplicated (tiled when the
// face repeats it), placed first-fit on a page-granular grid, and the face's
// texture coordinates are rewritten to address that region.

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "vtlab/build.h"
#include "vtlab/image.h"
#include "vtlab/scene.h"

namespace vtlab {

using Uv = std::array<double, 2>;

struct UnrolledFace {
  RgbImage image;
  std::vector<Uv> uvs;  // normalized into [0, 1]
  uint32_t repeat_s = 1;
  uint32_t repeat_t = 1;
  bool degenerate = false;  // zero UV area; given a single source copy
};

// `triangles` index into `uvs`. Throws kDomain for non-finite coordinates.
UnrolledFace UnrollFace(std::span<const Uv> uvs,
                        std::span<const std::array<uint32_t, 3>> triangles,
                        const RgbImage& source);

struct GridExtent {
  uint32_t cols = 0;
  uint32_t rows = 0;
  friend bool operator==(const GridExtent&, const GridExtent&) = default;
};

// Grid cells a w x h image occupies when every cell is one page.
GridExtent EstimateEntries(uint64_t width, uint64_t height, uint32_t page_size);

struct GridCell {
  uint32_t col = 0;
  uint32_t row = 0;
  friend bool operator==(const GridCell&, const GridCell&) = default;
};

// Square occupancy grid whose side is always a power of two.
class LayoutGrid {
 public:
  explicit LayoutGrid(uint32_t side = 1);

  uint32_t side() const { return side_; }
  bool occupied(uint32_t col, uint32_t row) const {
    return cells_[static_cast<size_t>(row) * side_ + col];
  }
  void Mark(GridCell origin, GridExtent extent);

  // Row-major scan from (0, 0) for the first free cols x rows block, which is
  // then marked occupied. When nothing fits the side doubles, keeping the
  // existing cells where they are, and the scan repeats.
  GridCell FirstFit(GridExtent extent);

 private:
  bool Fits(GridCell origin, GridExtent extent) const;
  void Grow();

  uint32_t side_;
  std::vector<bool> cells_;
};

struct FacePlacement {
  uint32_t face = 0;
  uint64_t x = 0;  // pixels in the top mip, multiple of page_size
  uint64_t y = 0;
  uint64_t width = 0;
  uint64_t height = 0;
};

// s' = (s * w_i + x) / w_d and t' = (t * h_i + y) / h_d.
Uv TransformUv(const Uv& uv, const FacePlacement& placement, uint64_t dest_width,
               uint64_t dest_height);

struct RetextureResult {
  LayoutFile layout;
  std::vector<RgbImage> unique_images;  // one per face, named in `layout`
  std::vector<FacePlacement> placements;
  std::vector<uint32_t> degenerate_faces;
  SceneMesh scene;  // virtual-texture coordinates, vertices unshared per face
};

// `sources[i]` is the image for scene.textures[i].
RetextureResult Retexture(const SceneMesh& scene,
                          std::span<const RgbImage> sources,
                          uint32_t page_size);

// Loads scene.textures relative to `base_dir`.
std::vector<RgbImage> LoadSceneTextures(const SceneMesh& scene,
                                        const std::filesystem::path& base_dir);

// Writes the unique PNGs, layout.json and scene.json into `out_dir`.
void WriteRetexture(const RetextureResult& result,
                    const std::filesystem::path& out_dir);

}  // namespace vtlab

#endif  // VTLAB_LAYOUT_H_
