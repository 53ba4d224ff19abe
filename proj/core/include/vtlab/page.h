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

#ifndef VTLAB_PAGE_H_
#define VTLAB_PAGE_H_

// Page addressing inside a virtual-texture mip pyramid.
//
// Mip 0 is the single-page, lowest-resolution level; mip m holds 2^m x 2^m
// pages. Pages are numbered two ways: relative to their level (row-major,
// x + y * 2^m) and absolutely, where all pages of lower levels come first.
// Absolute order therefore always lists a parent before its children.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace vtlab {

// Upper bound on mip_count; 4^20 pages is far past any realistic texture and
// keeps every count inside uint64_t.
inline constexpr uint32_t kMaxMipCount = 20;

struct TextureMeta {
  uint32_t page_size = 128;
  uint32_t border = 4;
  uint32_t mip_count = 1;
  uint32_t bytes_per_pixel = 3;

  // Throws VtError(kDomain) when the invariants do not hold: power-of-two
  // page size, border < page_size / 2, 1 <= mip_count <= kMaxMipCount and
  // RGB8 pixels.
  void Validate() const;

  uint32_t max_mip() const { return mip_count - 1; }
  // Edge length of the highest-resolution mip.
  uint64_t dim_max() const { return uint64_t{page_size} << (mip_count - 1); }
  uint64_t mip_dim(uint32_t mip) const { return uint64_t{page_size} << mip; }
  // Edge length of a page as stored on disk and in the cache.
  uint32_t stored_page_size() const { return page_size + 2 * border; }
  uint64_t page_bytes() const {
    return uint64_t{stored_page_size()} * stored_page_size() * bytes_per_pixel;
  }
  uint64_t total_pages() const;

  // Meta for a square texture whose top mip has edge `dim`.
  static TextureMeta ForDimension(uint64_t dim, uint32_t page_size,
                                  uint32_t border);

  friend bool operator==(const TextureMeta&, const TextureMeta&) = default;
};

struct PageId {
  uint32_t mip = 0;
  uint32_t x = 0;
  uint32_t y = 0;

  friend auto operator<=>(const PageId&, const PageId&) = default;
};

// Number of pages on one level, 4^mip. Throws kDomain if mip >= mip_count.
uint64_t PagesInMip(uint32_t mip, uint32_t mip_count);
// Sum of 4^i for i < mip_count.
uint64_t TotalPages(uint32_t mip_count);
// Absolute index of the first page of `mip`.
uint64_t MipBaseIndex(uint32_t mip);

// (x, y) of relative index `rel` on level `mip`. Throws kDomain if
// rel >= 4^mip.
struct PageXY {
  uint32_t x;
  uint32_t y;
  friend bool operator==(const PageXY&, const PageXY&) = default;
};
PageXY RelToXY(uint64_t rel, uint32_t mip);
uint64_t XYToRel(uint32_t x, uint32_t y, uint32_t mip);

bool IsValid(const PageId& id, uint32_t mip_count);

// Throws kDomain for coordinates outside the level, or a mip at or beyond
// mip_count.
uint64_t AbsIndex(const PageId& id, uint32_t mip_count = kMaxMipCount);
// Inverse of AbsIndex. Throws kRange if abs >= TotalPages(mip_count).
PageId FromAbs(uint64_t abs, uint32_t mip_count);

std::optional<PageId> Parent(const PageId& id);
// The four next-level pages covering the same area, or nothing at the top mip.
std::vector<PageId> Children(const PageId& id, uint32_t mip_count);
// Path from the parent of `id` up to and including the root.
std::vector<PageId> Ancestors(const PageId& id);
// True if `ancestor` lies strictly above `id` on its path to the root.
bool IsAncestor(const PageId& ancestor, const PageId& id);

}  // namespace vtlab

#endif  // VTLAB_PAGE_H_
