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

#include "vtlab/layout.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <unordered_map>

#include "vtlab/error.h"
#include "vtlab/png_io.h"

namespace vtlab {
namespace {

// Largest edge a unique image or the composed texture may reach.
constexpr uint64_t kMaxEdge = uint64_t{1} << 16;

double UvArea(const Uv& a, const Uv& b, const Uv& c) {
  return 0.5 * std::abs((b[0] - a[0]) * (c[1] - a[1]) -
                        (c[0] - a[0]) * (b[1] - a[1]));
}

}  // namespace

UnrolledFace UnrollFace(std::span<const Uv> uvs,
                        std::span<const std::array<uint32_t, 3>> triangles,
                        const RgbImage& source) {
  UnrolledFace out;
  if (uvs.empty()) {
    out.degenerate = true;
    out.image = source;
    return out;
  }
  double min_s = std::numeric_limits<double>::infinity();
  double min_t = min_s;
  double max_s = -min_s;
  double max_t = -min_s;
  for (const Uv& uv : uvs) {
    if (!std::isfinite(uv[0]) || !std::isfinite(uv[1])) {
      throw VtError(ErrorCode::kDomain, "non-finite texture coordinate");
    }
    min_s = std::min(min_s, uv[0]);
    max_s = std::max(max_s, uv[0]);
    min_t = std::min(min_t, uv[1]);
    max_t = std::max(max_t, uv[1]);
  }
  double area = 0.0;
  for (const auto& tri : triangles) {
    area += UvArea(uvs[tri[0]], uvs[tri[1]], uvs[tri[2]]);
  }
  const double base_s = std::floor(min_s);
  const double base_t = std::floor(min_t);

  if (area == 0.0) {
    out.degenerate = true;
    out.image = source;
    for (const Uv& uv : uvs) {
      out.uvs.push_back({std::clamp(uv[0] - base_s, 0.0, 1.0),
                         std::clamp(uv[1] - base_t, 0.0, 1.0)});
    }
    return out;
  }

  const double rs = std::max(1.0, std::ceil(max_s) - base_s);
  const double rt = std::max(1.0, std::ceil(max_t) - base_t);
  if (rs * source.width() > kMaxEdge || rt * source.height() > kMaxEdge) {
    throw VtError(ErrorCode::kDomain, "texture repeats too often to unroll");
  }
  out.repeat_s = static_cast<uint32_t>(rs);
  out.repeat_t = static_cast<uint32_t>(rt);
  out.image = RgbImage(source.width() * static_cast<int>(out.repeat_s),
                       source.height() * static_cast<int>(out.repeat_t));
  for (uint32_t j = 0; j < out.repeat_t; ++j) {
    for (uint32_t i = 0; i < out.repeat_s; ++i) {
      out.image.Blit(source, static_cast<int>(i) * source.width(),
                     static_cast<int>(j) * source.height());
    }
  }
  for (const Uv& uv : uvs) {
    out.uvs.push_back({(uv[0] - base_s) / rs, (uv[1] - base_t) / rt});
  }
  return out;
}

GridExtent EstimateEntries(uint64_t width, uint64_t height, uint32_t page_size) {
  if (width == 0 || height == 0 || page_size == 0) {
    throw VtError(ErrorCode::kDomain, "empty image or page size");
  }
  return {static_cast<uint32_t>((width + page_size - 1) / page_size),
          static_cast<uint32_t>((height + page_size - 1) / page_size)};
}

LayoutGrid::LayoutGrid(uint32_t side)
    : side_(side), cells_(static_cast<size_t>(side) * side, false) {
  if (side == 0 || (side & (side - 1)) != 0) {
    throw VtError(ErrorCode::kDomain, "grid side must be a power of two");
  }
}

bool LayoutGrid::Fits(GridCell origin, GridExtent extent) const {
  if (origin.col + extent.cols > side_ || origin.row + extent.rows > side_) {
    return false;
  }
  for (uint32_t r = origin.row; r < origin.row + extent.rows; ++r) {
    for (uint32_t c = origin.col; c < origin.col + extent.cols; ++c) {
      if (occupied(c, r)) return false;
    }
  }
  return true;
}

void LayoutGrid::Mark(GridCell origin, GridExtent extent) {
  for (uint32_t r = origin.row; r < origin.row + extent.rows; ++r) {
    for (uint32_t c = origin.col; c < origin.col + extent.cols; ++c) {
      cells_[static_cast<size_t>(r) * side_ + c] = true;
    }
  }
}

void LayoutGrid::Grow() {
  const uint32_t side = side_ * 2;
  std::vector<bool> cells(static_cast<size_t>(side) * side, false);
  for (uint32_t r = 0; r < side_; ++r) {
    for (uint32_t c = 0; c < side_; ++c) {
      cells[static_cast<size_t>(r) * side + c] = occupied(c, r);
    }
  }
  side_ = side;
  cells_ = std::move(cells);
}

GridCell LayoutGrid::FirstFit(GridExtent extent) {
  if (extent.cols == 0 || extent.rows == 0) {
    throw VtError(ErrorCode::kDomain, "extent must be at least one cell");
  }
  for (;;) {
    if (extent.cols <= side_ && extent.rows <= side_) {
      for (uint32_t r = 0; r + extent.rows <= side_; ++r) {
        for (uint32_t c = 0; c + extent.cols <= side_; ++c) {
          if (Fits({c, r}, extent)) {
            Mark({c, r}, extent);
            return {c, r};
          }
        }
      }
    }
    Grow();
  }
}

Uv TransformUv(const Uv& uv, const FacePlacement& placement, uint64_t dest_width,
               uint64_t dest_height) {
  return {(uv[0] * static_cast<double>(placement.width) +
           static_cast<double>(placement.x)) /
              static_cast<double>(dest_width),
          (uv[1] * static_cast<double>(placement.height) +
           static_cast<double>(placement.y)) /
              static_cast<double>(dest_height)};
}

RetextureResult Retexture(const SceneMesh& scene,
                          std::span<const RgbImage> sources,
                          uint32_t page_size) {
  scene.Validate();
  if (sources.size() != scene.textures.size()) {
    throw VtError(ErrorCode::kContract, "one source image per scene texture");
  }
  RetextureResult result;
  LayoutGrid grid(1);

  // Per face: local vertex list and unrolled image.
  struct Pending {
    std::vector<uint32_t> vertices;
    std::vector<std::array<uint32_t, 3>> triangles;
    UnrolledFace unrolled;
  };
  std::vector<Pending> pending(scene.faces.size());
  for (uint32_t f = 0; f < scene.faces.size(); ++f) {
    const SceneFace& face = scene.faces[f];
    Pending& p = pending[f];
    std::unordered_map<uint32_t, uint32_t> local;
    for (const auto& tri : face.triangles) {
      std::array<uint32_t, 3> lt{};
      for (int k = 0; k < 3; ++k) {
        auto [it, inserted] =
            local.emplace(tri[k], static_cast<uint32_t>(p.vertices.size()));
        if (inserted) p.vertices.push_back(tri[k]);
        lt[k] = it->second;
      }
      p.triangles.push_back(lt);
    }
    std::vector<Uv> uvs;
    for (uint32_t v : p.vertices) uvs.push_back(scene.vertices[v].uv);
    p.unrolled = UnrollFace(uvs, p.triangles, sources[face.texture]);
    if (p.unrolled.degenerate) result.degenerate_faces.push_back(f);

    const GridExtent extent =
        EstimateEntries(static_cast<uint64_t>(p.unrolled.image.width()),
                        static_cast<uint64_t>(p.unrolled.image.height()),
                        page_size);
    const GridCell cell = grid.FirstFit(extent);
    if (uint64_t{grid.side()} * page_size > kMaxEdge) {
      throw VtError(ErrorCode::kLayout, "layout exceeds the maximum texture edge");
    }
    result.placements.push_back(
        {f, uint64_t{cell.col} * page_size, uint64_t{cell.row} * page_size,
         static_cast<uint64_t>(p.unrolled.image.width()),
         static_cast<uint64_t>(p.unrolled.image.height())});
  }

  const uint64_t dim = uint64_t{grid.side()} * page_size;
  result.layout.target_dim = dim;
  for (uint32_t f = 0; f < scene.faces.size(); ++f) {
    char name[32];
    std::snprintf(name, sizeof(name), "face_%05u.png", f);
    const FacePlacement& pl = result.placements[f];
    result.layout.placements.push_back(
        {name, static_cast<int64_t>(pl.x), static_cast<int64_t>(pl.y)});
    result.scene.textures.push_back(name);

    Pending& p = pending[f];
    const auto base = static_cast<uint32_t>(result.scene.vertices.size());
    for (size_t i = 0; i < p.vertices.size(); ++i) {
      SceneVertex v = scene.vertices[p.vertices[i]];
      v.uv = TransformUv(p.unrolled.uvs[i], pl, dim, dim);
      result.scene.vertices.push_back(v);
    }
    SceneFace face;
    face.texture = f;
    for (const auto& lt : p.triangles) {
      face.triangles.push_back({base + lt[0], base + lt[1], base + lt[2]});
    }
    result.scene.faces.push_back(std::move(face));
    result.unique_images.push_back(std::move(p.unrolled.image));
  }
  return result;
}

std::vector<RgbImage> LoadSceneTextures(const SceneMesh& scene,
                                        const std::filesystem::path& base_dir) {
  std::vector<RgbImage> images;
  images.reserve(scene.textures.size());
  for (const auto& name : scene.textures) images.push_back(ReadPng(base_dir / name));
  return images;
}

void WriteRetexture(const RetextureResult& result,
                    const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (size_t i = 0; i < result.unique_images.size(); ++i) {
    WritePng(out_dir / result.layout.placements[i].image, result.unique_images[i]);
  }
  SaveLayout(out_dir / "layout.json", result.layout);
  SaveScene(out_dir / "scene.json", result.scene);
}

}  // namespace vtlab
