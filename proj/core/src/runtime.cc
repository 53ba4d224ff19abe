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

#include "vtlab/runtime.h"

#include <cstring>
#include <string>

#include "vtlab/error.h"

namespace vtlab {

PageCache::PageCache(const TextureMeta& meta, uint32_t frames_x,
                     uint32_t frames_y)
    : meta_(meta), frames_x_(frames_x), frames_y_(frames_y) {
  meta_.Validate();
  if (frames_x == 0 || frames_y == 0) {
    throw VtError(ErrorCode::kDomain, "cache needs at least one frame");
  }
  slots_.resize(frame_count());
  frame_of_page_.assign(meta_.total_pages(), -1);
  const int stored = static_cast<int>(meta_.stored_page_size());
  texture_ = RgbImage(static_cast<int>(frames_x) * stored,
                      static_cast<int>(frames_y) * stored);
}

std::optional<uint32_t> PageCache::FrameOf(const PageId& id) const {
  if (!IsValid(id, meta_.mip_count)) return std::nullopt;
  const int32_t f = frame_of_page_[AbsIndex(id, meta_.mip_count)];
  if (f < 0) return std::nullopt;
  return static_cast<uint32_t>(f);
}

uint32_t PageCache::locked_count() const {
  uint32_t n = 0;
  for (const Slot& s : slots_) n += s.locked ? 1 : 0;
  return n;
}

std::optional<PageId> PageCache::Insert(const PagePayload& payload) {
  const uint64_t abs = AbsIndex(payload.id, meta_.mip_count);
  if (payload.pixels.size() != meta_.page_bytes()) {
    throw VtError(ErrorCode::kContract, "payload size does not match the cache");
  }
  if (frame_of_page_[abs] >= 0) {
    slots_[frame_of_page_[abs]].last_use = clock_;
    return std::nullopt;
  }

  int64_t victim = -1;
  for (uint32_t f = 0; f < slots_.size(); ++f) {
    if (slots_[f].locked) continue;
    if (victim < 0 || slots_[f].last_use < slots_[victim].last_use) victim = f;
  }
  if (victim < 0) {
    throw VtError(ErrorCode::kCapacity, "every cache frame is locked");
  }

  Slot& slot = slots_[victim];
  std::optional<PageId> evicted = slot.page;
  if (evicted) {
    frame_of_page_[AbsIndex(*evicted, meta_.mip_count)] = -1;
  } else {
    ++resident_;
  }
  slot.page = payload.id;
  slot.last_use = clock_;
  frame_of_page_[abs] = static_cast<int32_t>(victim);

  const FrameCoord fc = coord(static_cast<uint32_t>(victim));
  const size_t stored = meta_.stored_page_size();
  const size_t row_bytes = stored * 3;
  for (size_t y = 0; y < stored; ++y) {
    std::memcpy(texture_.row(static_cast<int>(fc.fy * stored + y)) +
                    fc.fx * row_bytes,
                &payload.pixels[y * row_bytes], row_bytes);
  }
  return evicted;
}

void PageCache::Touch(const PageId& id) {
  if (auto f = FrameOf(id)) slots_[*f].last_use = clock_;
}

bool PageCache::Evict(const PageId& id) {
  const auto f = FrameOf(id);
  if (!f) return false;
  Slot& slot = slots_[*f];
  if (slot.locked) {
    throw VtError(ErrorCode::kContract, "cannot evict a locked page");
  }
  frame_of_page_[AbsIndex(id, meta_.mip_count)] = -1;
  slot.page.reset();
  slot.last_use = -1;
  --resident_;
  return true;
}

void PageCache::Lock(const PageId& id) {
  const auto f = FrameOf(id);
  if (!f) throw VtError(ErrorCode::kContract, "only resident pages can be locked");
  slots_[*f].locked = true;
}

PageTable::PageTable(const TextureMeta& meta)
    : meta_(meta), entries_(meta.total_pages()) {}

void PageTable::Update(const PageCache& cache) {
  for (uint64_t abs = 0; abs < entries_.size(); ++abs) {
    PageTableEntry& e = entries_[abs];
    const PageId id = FromAbs(abs, meta_.mip_count);
    if (const auto f = cache.FrameOf(id)) {
      e.resident = true;
      e.frame = cache.coord(*f);
      e.source_mip = id.mip;
    } else if (const auto parent = Parent(id)) {
      const PageTableEntry& p = entries_[AbsIndex(*parent, meta_.mip_count)];
      e.resident = false;
      e.frame = p.frame;
      e.source_mip = p.source_mip;
    } else {
      throw VtError(ErrorCode::kContract,
                    "root page is not resident; fallback chain is broken");
    }
  }
}

void PageTable::ClearScratch() {
  for (PageTableEntry& e : entries_) {
    e.needed = false;
    e.pixel_count = 0;
    e.weighted_pixels = 0.0;
    e.distance_sum = 0.0;
  }
}

IndirectionTable IndirectionTable::Build(const PageTable& table) {
  IndirectionTable out;
  out.texels_.resize(table.size());
  for (uint64_t abs = 0; abs < table.size(); ++abs) {
    const PageTableEntry& e = table[abs];
    out.texels_[abs] = {e.frame.fx, e.frame.fy, e.source_mip};
  }
  return out;
}

VirtualTextureRuntime::VirtualTextureRuntime(const PageSource& source,
                                             uint32_t frames_x,
                                             uint32_t frames_y)
    : source_(source),
      cache_(source.meta(), frames_x, frames_y),
      table_(source.meta()) {
  cache_.Insert(source_.ReadPage(0));
  cache_.Lock(PageId{0, 0, 0});
  Commit();
}

void VirtualTextureRuntime::LockMips(uint32_t k) {
  if (k > meta().mip_count) {
    throw VtError(ErrorCode::kDomain, "cannot lock " + std::to_string(k) +
                                          " mips of a " +
                                          std::to_string(meta().mip_count) +
                                          "-level texture");
  }
  const uint64_t needed = TotalPages(k);
  if (needed > cache_.frame_count()) {
    throw VtError(ErrorCode::kCapacity,
                  "locking " + std::to_string(k) + " mips needs " +
                      std::to_string(needed) + " frames, cache has " +
                      std::to_string(cache_.frame_count()));
  }
  // Locked frames can never be chosen as victims, so pages already pinned
  // stay put while the rest are inserted.
  for (uint64_t abs = 0; abs < needed; ++abs) {
    const PageId id = FromAbs(abs, meta().mip_count);
    if (!cache_.IsResident(id)) cache_.Insert(source_.ReadPage(abs));
    cache_.Lock(id);
  }
  Commit();
}

std::optional<PageId> VirtualTextureRuntime::Load(const PageId& id) {
  return cache_.Insert(source_.ReadPage(AbsIndex(id, meta().mip_count)));
}

void VirtualTextureRuntime::Commit() {
  table_.Update(cache_);
  indirection_ = IndirectionTable::Build(table_);
}

}  // namespace vtlab
