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

#ifndef VTLAB_RUNTIME_H_
#define VTLAB_RUNTIME_H_

// Runtime residency state: the page cache, the quadtree page table with
// ancestor fallback, and the indirection table the sampler reads.

#include <cstdint>
#include <optional>
#include <vector>

#include "vtlab/image.h"
#include "vtlab/page.h"
#include "vtlab/vtx_file.h"

namespace vtlab {

struct FrameCoord {
  uint32_t fx = 0;
  uint32_t fy = 0;
  friend bool operator==(const FrameCoord&, const FrameCoord&) = default;
};

// A grid of equally sized frames, each holding one bordered page. The
// physical texture is kept as a single RGB image so frames are addressed the
// same way a GPU cache texture would be.
class PageCache {
 public:
  struct Slot {
    std::optional<PageId> page;
    int64_t last_use = -1;  // clock value of the last insert or touch
    bool locked = false;
  };

  PageCache(const TextureMeta& meta, uint32_t frames_x, uint32_t frames_y);

  const TextureMeta& meta() const { return meta_; }
  uint32_t frames_x() const { return frames_x_; }
  uint32_t frames_y() const { return frames_y_; }
  uint32_t frame_count() const { return frames_x_ * frames_y_; }
  FrameCoord coord(uint32_t frame) const {
    return {frame % frames_x_, frame / frames_x_};
  }
  const Slot& slot(uint32_t frame) const { return slots_[frame]; }

  // Advances the recency clock; call once per rendered frame.
  void BeginFrame() { ++clock_; }
  int64_t clock() const { return clock_; }

  // Places the page in the least recently used unlocked frame (lowest frame
  // index on ties; empty frames count as never used) and returns the evicted
  // page, if any. A page that is already resident only has its recency
  // refreshed. Throws kCapacity when every frame is locked.
  std::optional<PageId> Insert(const PagePayload& payload);
  // Marks a resident page as used at the current clock; no-op otherwise.
  void Touch(const PageId& id);
  // Drops a resident, unlocked page. Returns false if it was not resident.
  // Throws kContract for locked pages.
  bool Evict(const PageId& id);
  // Pins a resident page. Throws kContract if it is not resident.
  void Lock(const PageId& id);

  bool IsResident(const PageId& id) const { return FrameOf(id).has_value(); }
  std::optional<uint32_t> FrameOf(const PageId& id) const;
  uint32_t resident_count() const { return resident_; }
  uint32_t locked_count() const;

  // The physical texture: frames_x * stored_page_size wide.
  const RgbImage& texture() const { return texture_; }
  // Texel (x, y) of a frame, both measured inside the bordered frame.
  Rgb8 texel(FrameCoord frame, int x, int y) const {
    const int stored = static_cast<int>(meta_.stored_page_size());
    return texture_.at(static_cast<int>(frame.fx) * stored + x,
                       static_cast<int>(frame.fy) * stored + y);
  }

 private:
  TextureMeta meta_;
  uint32_t frames_x_;
  uint32_t frames_y_;
  int64_t clock_ = 0;
  uint32_t resident_ = 0;
  std::vector<Slot> slots_;
  std::vector<int32_t> frame_of_page_;  // by absolute index, -1 if absent
  RgbImage texture_;
};

struct PageTableEntry {
  bool resident = false;
  FrameCoord frame;         // own frame, or the nearest resident ancestor's
  uint32_t source_mip = 0;  // mip of the page that occupies `frame`

  // Per-frame analysis scratch.
  bool needed = false;
  uint32_t pixel_count = 0;
  double weighted_pixels = 0.0;
  double distance_sum = 0.0;
};

// One entry per page in absolute order, so every parent precedes its
// children and a single ascending pass resolves all fallbacks.
class PageTable {
 public:
  explicit PageTable(const TextureMeta& meta);

  const TextureMeta& meta() const { return meta_; }
  size_t size() const { return entries_.size(); }
  const PageTableEntry& operator[](uint64_t abs) const { return entries_[abs]; }
  PageTableEntry& operator[](uint64_t abs) { return entries_[abs]; }
  const PageTableEntry& at(const PageId& id) const {
    return entries_[AbsIndex(id, meta_.mip_count)];
  }

  // Resident pages point at their own frame; every other page inherits its
  // parent's frame and source mip. Throws kContract if the root page is not
  // resident, since then the fallback chain has nowhere to end.
  void Update(const PageCache& cache);
  void ClearScratch();

 private:
  TextureMeta meta_;
  std::vector<PageTableEntry> entries_;
};

// Flattened page table as read by the shader: r = f_x, g = f_y, b = mip of
// the page in that frame.
struct IndirectionTexel {
  uint32_t r = 0;
  uint32_t g = 0;
  uint32_t b = 0;
  friend bool operator==(const IndirectionTexel&, const IndirectionTexel&) = default;
};

class IndirectionTable {
 public:
  IndirectionTable() = default;
  static IndirectionTable Build(const PageTable& table);

  bool empty() const { return texels_.empty(); }
  size_t size() const { return texels_.size(); }
  const IndirectionTexel& operator[](uint64_t abs) const { return texels_[abs]; }

 private:
  std::vector<IndirectionTexel> texels_;
};

// Cache, page table and indirection table kept consistent for one texture.
// The root page is loaded and locked on construction.
class VirtualTextureRuntime {
 public:
  VirtualTextureRuntime(const PageSource& source, uint32_t frames_x,
                        uint32_t frames_y);

  const TextureMeta& meta() const { return cache_.meta(); }
  const PageSource& source() const { return source_; }
  const PageCache& cache() const { return cache_; }
  PageCache& cache() { return cache_; }
  const PageTable& page_table() const { return table_; }
  PageTable& page_table() { return table_; }
  const IndirectionTable& indirection() const { return indirection_; }

  // Loads and pins every page of mips [0, k). Throws kCapacity if the cache
  // has fewer frames than those pages, kDomain if k > mip_count.
  void LockMips(uint32_t k);
  // Reads the page from the source and inserts it. Does not commit.
  std::optional<PageId> Load(const PageId& id);
  std::optional<PageId> Insert(const PagePayload& payload) {
    return cache_.Insert(payload);
  }
  // Refreshes the page table and regenerates the indirection table.
  void Commit();

 private:
  const PageSource& source_;
  PageCache cache_;
  PageTable table_;
  IndirectionTable indirection_;
};

}  // namespace vtlab

#endif  // VTLAB_RUNTIME_H_
