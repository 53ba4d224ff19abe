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

#include "vtlab/page.h"

#include <bit>
#include <string>

#include "vtlab/error.h"

namespace vtlab {

void TextureMeta::Validate() const {
  if (page_size == 0 || !std::has_single_bit(page_size)) {
    throw VtError(ErrorCode::kDomain,
                  "page size must be a power of two, got " +
                      std::to_string(page_size));
  }
  if (border >= page_size / 2 && border != 0) {
    throw VtError(ErrorCode::kDomain, "border must be < page_size / 2");
  }
  if (mip_count < 1 || mip_count > kMaxMipCount) {
    throw VtError(ErrorCode::kDomain,
                  "mip count out of range: " + std::to_string(mip_count));
  }
  if (bytes_per_pixel != 3) {
    throw VtError(ErrorCode::kDomain, "only RGB8 (3 bytes per pixel) is supported");
  }
}

uint64_t TextureMeta::total_pages() const { return TotalPages(mip_count); }

TextureMeta TextureMeta::ForDimension(uint64_t dim, uint32_t page_size,
                                      uint32_t border) {
  if (page_size == 0 || dim < page_size || dim % page_size != 0 ||
      !std::has_single_bit(dim / page_size)) {
    throw VtError(ErrorCode::kDomain,
                  "texture edge " + std::to_string(dim) +
                      " is not page_size * 2^k");
  }
  TextureMeta meta;
  meta.page_size = page_size;
  meta.border = border;
  meta.mip_count = static_cast<uint32_t>(std::countr_zero(dim / page_size)) + 1;
  meta.Validate();
  return meta;
}

uint64_t PagesInMip(uint32_t mip, uint32_t mip_count) {
  if (mip >= mip_count) {
    throw VtError(ErrorCode::kDomain, "mip " + std::to_string(mip) +
                                          " outside pyramid of " +
                                          std::to_string(mip_count));
  }
  return uint64_t{1} << (2 * mip);
}

uint64_t MipBaseIndex(uint32_t mip) {
  // sum_{i<mip} 4^i = (4^mip - 1) / 3
  return ((uint64_t{1} << (2 * mip)) - 1) / 3;
}

uint64_t TotalPages(uint32_t mip_count) { return MipBaseIndex(mip_count); }

PageXY RelToXY(uint64_t rel, uint32_t mip) {
  if (mip >= kMaxMipCount || rel >= (uint64_t{1} << (2 * mip))) {
    throw VtError(ErrorCode::kDomain, "relative index " + std::to_string(rel) +
                                          " outside mip " + std::to_string(mip));
  }
  const uint64_t side = uint64_t{1} << mip;
  return {static_cast<uint32_t>(rel % side), static_cast<uint32_t>(rel / side)};
}

uint64_t XYToRel(uint32_t x, uint32_t y, uint32_t mip) {
  const uint64_t side = uint64_t{1} << mip;
  if (mip >= kMaxMipCount || x >= side || y >= side) {
    throw VtError(ErrorCode::kDomain, "page coordinates outside mip " +
                                          std::to_string(mip));
  }
  return x + y * side;
}

bool IsValid(const PageId& id, uint32_t mip_count) {
  if (id.mip >= mip_count || id.mip >= kMaxMipCount) return false;
  const uint64_t side = uint64_t{1} << id.mip;
  return id.x < side && id.y < side;
}

uint64_t AbsIndex(const PageId& id, uint32_t mip_count) {
  if (!IsValid(id, mip_count)) {
    throw VtError(ErrorCode::kDomain,
                  "invalid page (" + std::to_string(id.mip) + ", " +
                      std::to_string(id.x) + ", " + std::to_string(id.y) + ")");
  }
  return MipBaseIndex(id.mip) + XYToRel(id.x, id.y, id.mip);
}

PageId FromAbs(uint64_t abs, uint32_t mip_count) {
  if (mip_count > kMaxMipCount || abs >= TotalPages(mip_count)) {
    throw VtError(ErrorCode::kRange, "absolute page index " +
                                         std::to_string(abs) + " out of range");
  }
  uint32_t mip = 0;
  while (MipBaseIndex(mip + 1) <= abs) ++mip;
  const PageXY xy = RelToXY(abs - MipBaseIndex(mip), mip);
  return {mip, xy.x, xy.y};
}

std::optional<PageId> Parent(const PageId& id) {
  if (id.mip == 0) return std::nullopt;
  return PageId{id.mip - 1, id.x / 2, id.y / 2};
}

std::vector<PageId> Children(const PageId& id, uint32_t mip_count) {
  if (id.mip + 1 >= mip_count) return {};
  const uint32_t m = id.mip + 1;
  return {{m, 2 * id.x, 2 * id.y},
          {m, 2 * id.x + 1, 2 * id.y},
          {m, 2 * id.x, 2 * id.y + 1},
          {m, 2 * id.x + 1, 2 * id.y + 1}};
}

std::vector<PageId> Ancestors(const PageId& id) {
  std::vector<PageId> path;
  path.reserve(id.mip);
  for (auto p = Parent(id); p; p = Parent(*p)) path.push_back(*p);
  return path;
}

bool IsAncestor(const PageId& ancestor, const PageId& id) {
  if (ancestor.mip >= id.mip) return false;
  const uint32_t shift = id.mip - ancestor.mip;
  return (id.x >> shift) == ancestor.x && (id.y >> shift) == ancestor.y;
}

}  // namespace vtlab
