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

#include "vtlab/build.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vtlab/error.h"
#include "vtlab/png_io.h"

namespace vtlab {

using nlohmann::json;

LayoutFile ParseLayoutJson(const std::string& text) {
  LayoutFile layout;
  try {
    const json doc = json::parse(text);
    layout.target_dim = doc.at("target_dim").get<uint64_t>();
    for (const auto& p : doc.at("placements")) {
      layout.placements.push_back({p.at("image").get<std::string>(),
                                   p.at("x").get<int64_t>(),
                                   p.at("y").get<int64_t>()});
    }
  } catch (const json::exception& e) {
    throw VtError(ErrorCode::kFormat, std::string("layout JSON: ") + e.what());
  }
  return layout;
}

std::string LayoutToJson(const LayoutFile& layout) {
  json doc;
  doc["target_dim"] = layout.target_dim;
  json placements = json::array();
  for (const auto& p : layout.placements) {
    placements.push_back({{"image", p.image}, {"x", p.x}, {"y", p.y}});
  }
  doc["placements"] = std::move(placements);
  return doc.dump(1);
}

LayoutFile LoadLayout(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw VtError(ErrorCode::kIo, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseLayoutJson(ss.str());
}

void SaveLayout(const std::filesystem::path& path, const LayoutFile& layout) {
  std::ofstream out(path);
  out << LayoutToJson(layout) << '\n';
  if (!out) throw VtError(ErrorCode::kIo, "cannot write " + path.string());
}

RgbImage ComposeTop(uint64_t target_dim, std::span<const PlacedImage> images) {
  if (target_dim == 0 || target_dim > (uint64_t{1} << 16)) {
    throw VtError(ErrorCode::kLayout,
                  "target dimension " + std::to_string(target_dim) +
                      " cannot be composed in memory");
  }
  const auto dim = static_cast<int64_t>(target_dim);
  for (size_t i = 0; i < images.size(); ++i) {
    const auto& a = images[i];
    if (a.x < 0 || a.y < 0 || a.x + a.image->width() > dim ||
        a.y + a.image->height() > dim) {
      throw VtError(ErrorCode::kLayout,
                    "placement " + std::to_string(i) + " leaves the texture");
    }
    for (size_t j = 0; j < i; ++j) {
      const auto& b = images[j];
      const bool disjoint = a.x + a.image->width() <= b.x ||
                            b.x + b.image->width() <= a.x ||
                            a.y + a.image->height() <= b.y ||
                            b.y + b.image->height() <= a.y;
      if (!disjoint) {
        throw VtError(ErrorCode::kLayout, "placements " + std::to_string(j) +
                                              " and " + std::to_string(i) +
                                              " overlap");
      }
    }
  }
  RgbImage top(static_cast<int>(dim), static_cast<int>(dim));
  for (const auto& p : images) {
    top.Blit(*p.image, static_cast<int>(p.x), static_cast<int>(p.y));
  }
  return top;
}

RgbImage ComposeTop(const LayoutFile& layout,
                    const std::filesystem::path& base_dir) {
  std::vector<RgbImage> loaded;
  loaded.reserve(layout.placements.size());
  for (const auto& p : layout.placements) {
    loaded.push_back(ReadPng(base_dir / p.image));
  }
  std::vector<PlacedImage> placed;
  for (size_t i = 0; i < loaded.size(); ++i) {
    placed.push_back({&loaded[i], layout.placements[i].x,
                      layout.placements[i].y});
  }
  return ComposeTop(layout.target_dim, placed);
}

RgbImage Downsample(const RgbImage& image) {
  if (image.width() != image.height() || image.width() % 2 != 0 ||
      image.empty()) {
    throw VtError(ErrorCode::kDomain,
                  "downsample needs a square image with even edge, got " +
                      std::to_string(image.width()) + "x" +
                      std::to_string(image.height()));
  }
  const int half = image.width() / 2;
  RgbImage out(half, half);
  for (int y = 0; y < half; ++y) {
    const uint8_t* r0 = image.row(2 * y);
    const uint8_t* r1 = image.row(2 * y + 1);
    uint8_t* dst = out.row(y);
    for (int x = 0; x < half; ++x) {
      for (int c = 0; c < 3; ++c) {
        const int sum = r0[6 * x + c] + r0[6 * x + 3 + c] + r1[6 * x + c] +
                        r1[6 * x + 3 + c];
        dst[3 * x + c] = static_cast<uint8_t>((sum + 2) / 4);
      }
    }
  }
  return out;
}

MipChain BuildChain(RgbImage top, uint32_t page_size, uint32_t border) {
  if (top.width() != top.height()) {
    throw VtError(ErrorCode::kDomain, "top mip must be square");
  }
  MipChain chain;
  chain.meta = TextureMeta::ForDimension(static_cast<uint64_t>(top.width()),
                                         page_size, border);
  chain.levels.resize(chain.meta.mip_count);
  chain.levels.back() = std::move(top);
  for (int m = static_cast<int>(chain.meta.mip_count) - 2; m >= 0; --m) {
    chain.levels[m] = Downsample(chain.levels[m + 1]);
  }
  return chain;
}

PagePayload CutPage(const MipChain& chain, const PageId& id) {
  const TextureMeta& meta = chain.meta;
  if (!IsValid(id, meta.mip_count)) {
    throw VtError(ErrorCode::kDomain, "page outside the pyramid");
  }
  const RgbImage& img = chain.level(id.mip);
  const int64_t stored = meta.stored_page_size();
  const int64_t x0 = int64_t{id.x} * meta.page_size - meta.border;
  const int64_t y0 = int64_t{id.y} * meta.page_size - meta.border;
  PagePayload page;
  page.id = id;
  page.pixels.resize(meta.page_bytes());
  uint8_t* dst = page.pixels.data();
  for (int64_t y = 0; y < stored; ++y) {
    for (int64_t x = 0; x < stored; ++x) {
      const Rgb8 c = img.at_clamped(x0 + x, y0 + y);
      *dst++ = c[0];
      *dst++ = c[1];
      *dst++ = c[2];
    }
  }
  return page;
}

double PageNoise(const MipChain& chain, const PageId& id) {
  const auto parent = Parent(id);
  if (!parent) return 0.0;
  const int page = static_cast<int>(chain.meta.page_size);
  const int half = page / 2;
  const RgbImage& child = chain.level(id.mip);
  const RgbImage& coarse = chain.level(parent->mip);

  // The child covers the quarter of its parent starting at (x, y) * half in
  // the coarser level.
  const int qx = static_cast<int>(id.x) * half;
  const int qy = static_cast<int>(id.y) * half;
  std::vector<double> quarter(static_cast<size_t>(half) * half);
  for (int y = 0; y < half; ++y) {
    for (int x = 0; x < half; ++x) {
      quarter[static_cast<size_t>(y) * half + x] =
          Luminance(coarse.at(qx + x, qy + y));
    }
  }
  auto q = [&](int x, int y) {
    x = std::clamp(x, 0, half - 1);
    y = std::clamp(y, 0, half - 1);
    return quarter[static_cast<size_t>(y) * half + x];
  };

  const int cx = static_cast<int>(id.x) * page;
  const int cy = static_cast<int>(id.y) * page;
  double sum_sq = 0.0;
  for (int y = 0; y < page; ++y) {
    const double v = (y + 0.5) / 2.0 - 0.5;
    const int y0 = static_cast<int>(std::floor(v));
    const double fy = v - y0;
    for (int x = 0; x < page; ++x) {
      const double u = (x + 0.5) / 2.0 - 0.5;
      const int x0 = static_cast<int>(std::floor(u));
      const double fx = u - x0;
      const double up = (1 - fy) * ((1 - fx) * q(x0, y0) + fx * q(x0 + 1, y0)) +
                        fy * ((1 - fx) * q(x0, y0 + 1) + fx * q(x0 + 1, y0 + 1));
      const double d = Luminance(child.at(cx + x, cy + y)) - up;
      sum_sq += d * d;
    }
  }
  return std::sqrt(sum_sq / (static_cast<double>(page) * page));
}

NoiseTable ComputeNoise(const MipChain& chain) {
  NoiseTable table;
  const uint64_t total = chain.meta.total_pages();
  table.values.resize(total);
  for (uint64_t abs = 0; abs < total; ++abs) {
    table.values[abs] =
        static_cast<float>(PageNoise(chain, FromAbs(abs, chain.meta.mip_count)));
  }
  return table;
}

void WriteVirtualTexture(const MipChain& chain,
                         const std::filesystem::path& vtx_path,
                         const std::filesystem::path& vtn_path) {
  VtxWriter writer(vtx_path, chain.meta);
  const uint64_t total = chain.meta.total_pages();
  for (uint64_t abs = 0; abs < total; ++abs) {
    writer.Append(CutPage(chain, FromAbs(abs, chain.meta.mip_count)));
  }
  writer.Finish();
  WriteNoise(vtn_path, ComputeNoise(chain));
}

BuildResult BuildVirtualTexture(const LayoutFile& layout,
                                const std::filesystem::path& base_dir,
                                uint32_t page_size, uint32_t border,
                                const std::filesystem::path& vtx_path,
                                const std::filesystem::path& vtn_path) {
  TextureMeta::ForDimension(layout.target_dim, page_size, border);  // validate
  MipChain chain = BuildChain(ComposeTop(layout, base_dir), page_size, border);
  WriteVirtualTexture(chain, vtx_path, vtn_path);
  return {chain.meta, chain.meta.total_pages()};
}

MipChain ReadMipChain(const PageSource& source) {
  MipChain chain;
  chain.meta = source.meta();
  const TextureMeta& meta = chain.meta;
  const int page = static_cast<int>(meta.page_size);
  const int stored = static_cast<int>(meta.stored_page_size());
  const int border = static_cast<int>(meta.border);
  for (uint32_t m = 0; m < meta.mip_count; ++m) {
    const int dim = static_cast<int>(meta.mip_dim(m));
    RgbImage level(dim, dim);
    const uint32_t side = 1u << m;
    for (uint32_t y = 0; y < side; ++y) {
      for (uint32_t x = 0; x < side; ++x) {
        const PagePayload p = source.ReadPage(AbsIndex({m, x, y}, meta.mip_count));
        for (int row = 0; row < page; ++row) {
          const uint8_t* src =
              &p.pixels[(static_cast<size_t>(row + border) * stored + border) * 3];
          std::copy(src, src + 3 * page,
                    level.row(static_cast<int>(y) * page + row) +
                        static_cast<size_t>(x) * page * 3);
        }
      }
    }
    chain.levels.push_back(std::move(level));
  }
  return chain;
}

PagePayload ChainPageSource::ReadPage(uint64_t abs) const {
  return CutPage(chain_, FromAbs(abs, chain_.meta.mip_count));
}

}  // namespace vtlab
