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

#ifndef VTLAB_BUILD_H_
#define VTLAB_BUILD_H_

// Virtual texture compilation: compose the top mip from placed images, build
// the mip chain, cut bordered pages, compute NoiseValues and write the
// .vtx / .vtn pair.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "vtlab/image.h"
#include "vtlab/page.h"
#include "vtlab/vtx_file.h"

namespace vtlab {

// Layout file (JSON):
//   {"target_dim": 4096,
//    "placements": [{"image": "face_0000.png", "x": 0, "y": 0}, ...]}
// Image paths are resolved relative to the layout file's directory.
struct LayoutPlacement {
  std::string image;
  int64_t x = 0;
  int64_t y = 0;

  friend bool operator==(const LayoutPlacement&, const LayoutPlacement&) = default;
};

struct LayoutFile {
  uint64_t target_dim = 0;
  std::vector<LayoutPlacement> placements;

  friend bool operator==(const LayoutFile&, const LayoutFile&) = default;
};

LayoutFile ParseLayoutJson(const std::string& text);
std::string LayoutToJson(const LayoutFile& layout);
LayoutFile LoadLayout(const std::filesystem::path& path);
void SaveLayout(const std::filesystem::path& path, const LayoutFile& layout);

struct PlacedImage {
  const RgbImage* image = nullptr;
  int64_t x = 0;
  int64_t y = 0;
};

// Copies every image verbatim into a black target_dim^2 canvas. Throws
// kLayout for placements that leave the canvas or overlap each other.
RgbImage ComposeTop(uint64_t target_dim, std::span<const PlacedImage> images);
// Same, loading the PNGs named by the layout.
RgbImage ComposeTop(const LayoutFile& layout,
                    const std::filesystem::path& base_dir);

// Halves the edge length with a 2x2 box filter, rounding half up. This is the
// exact form bilinear filtering takes at a 1/2 scale. Throws kDomain for odd
// or non-square input.
RgbImage Downsample(const RgbImage& image);

// levels[0] is one page wide, levels[mip_count - 1] is the full texture.
struct MipChain {
  TextureMeta meta;
  std::vector<RgbImage> levels;

  const RgbImage& level(uint32_t mip) const { return levels[mip]; }
};

// `top` must be square with edge page_size * 2^k.
MipChain BuildChain(RgbImage top, uint32_t page_size, uint32_t border);

// Bordered page; texels beyond the mip image are clamped to its edge.
PagePayload CutPage(const MipChain& chain, const PageId& id);

// RMSE in luminance between a page and the bilinearly upsampled quarter of
// its parent that covers the same area. The root page has no parent and
// scores 0.
double PageNoise(const MipChain& chain, const PageId& id);
NoiseTable ComputeNoise(const MipChain& chain);

// Writes every page in absolute order followed by the NoiseValue sidecar.
void WriteVirtualTexture(const MipChain& chain,
                         const std::filesystem::path& vtx_path,
                         const std::filesystem::path& vtn_path);

struct BuildResult {
  TextureMeta meta;
  uint64_t pages = 0;
};

BuildResult BuildVirtualTexture(const LayoutFile& layout,
                                const std::filesystem::path& base_dir,
                                uint32_t page_size, uint32_t border,
                                const std::filesystem::path& vtx_path,
                                const std::filesystem::path& vtn_path);

// Reassembles the mip images from the page interiors of a stored texture.
MipChain ReadMipChain(const PageSource& source);

// An in-memory PageSource that cuts pages from a chain on demand.
class ChainPageSource : public PageSource {
 public:
  explicit ChainPageSource(const MipChain& chain) : chain_(chain) {}
  const TextureMeta& meta() const override { return chain_.meta; }
  PagePayload ReadPage(uint64_t abs) const override;

 private:
  const MipChain& chain_;
};

}  // namespace vtlab

#endif  // VTLAB_BUILD_H_
