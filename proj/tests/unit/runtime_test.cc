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


#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "vtlab/build.h"
#include "vtlab/runtime.h"
#include "vtlab_testing/expect_error.h"
#include "vtlab_testing/scenes.h"

namespace vtlab {
namespace {

using testing::RandomImage;

PagePayload Payload(const TextureMeta& meta, const PageId& id) {
  PagePayload p;
  p.id = id;
  p.pixels.assign(meta.page_bytes(), static_cast<uint8_t>(AbsIndex(id, meta.mip_count)));
  return p;
}

const TextureMeta kMeta{4, 1, 3, 3};  // 21 pages

TEST(PageCacheTest, FirstInsertTakesFrameZero) {
  PageCache cache(kMeta, 2, 2);
  EXPECT_FALSE(cache.Insert(Payload(kMeta, {1, 1, 0})).has_value());
  EXPECT_EQ(cache.FrameOf({1, 1, 0}), 0u);
  EXPECT_EQ(cache.resident_count(), 1u);
  EXPECT_EQ(cache.texel(cache.coord(0), 0, 0), (Rgb8{2, 2, 2}));
}

TEST(PageCacheTest, EvictsLeastRecentlyUsed) {
  PageCache cache(kMeta, 2, 2);
  const PageId pages[] = {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}};
  for (const PageId& id : pages) {
    cache.BeginFrame();
    cache.Insert(Payload(kMeta, id));
  }
  cache.BeginFrame();
  cache.Touch(pages[0]);
  cache.BeginFrame();
  const auto evicted = cache.Insert(Payload(kMeta, {2, 0, 0}));
  ASSERT_TRUE(evicted.has_value());
  EXPECT_EQ(*evicted, pages[1]);
  EXPECT_FALSE(cache.IsResident(pages[1]));
  EXPECT_EQ(cache.FrameOf({2, 0, 0}), 1u);
}

TEST(PageCacheTest, ReinsertOnlyRefreshesRecency) {
  PageCache cache(kMeta, 2, 1);
  cache.Insert(Payload(kMeta, {1, 0, 0}));
  cache.BeginFrame();
  cache.Insert(Payload(kMeta, {1, 1, 0}));
  cache.BeginFrame();
  EXPECT_FALSE(cache.Insert(Payload(kMeta, {1, 0, 0})).has_value());
  EXPECT_EQ(cache.slot(0).last_use, cache.clock());
  EXPECT_EQ(cache.Insert(Payload(kMeta, {2, 0, 0})), (PageId{1, 1, 0}));
}

TEST(PageCacheTest, TouchIsIdempotentAndIgnoresAbsentPages) {
  PageCache cache(kMeta, 2, 1);
  cache.Insert(Payload(kMeta, {1, 0, 0}));
  cache.BeginFrame();
  cache.Touch({1, 0, 0});
  cache.Touch({1, 0, 0});
  EXPECT_EQ(cache.slot(0).last_use, 1);
  cache.Touch({2, 3, 3});
  EXPECT_EQ(cache.resident_count(), 1u);
}

TEST(PageCacheTest, LockedFramesAreNeverVictims) {
  PageCache cache(kMeta, 2, 1);
  cache.Insert(Payload(kMeta, {0, 0, 0}));
  cache.Lock({0, 0, 0});
  for (uint64_t abs = 1; abs < 21; ++abs) {
    cache.BeginFrame();
    cache.Insert(Payload(kMeta, FromAbs(abs, 3)));
    ASSERT_TRUE(cache.IsResident({0, 0, 0}));
  }
  EXPECT_VT_ERROR(cache.Evict({0, 0, 0}), ErrorCode::kContract);
  cache.Lock({2, 3, 3});
  EXPECT_VT_ERROR(cache.Insert(Payload(kMeta, {1, 0, 0})), ErrorCode::kCapacity);
  EXPECT_VT_ERROR(cache.Lock({1, 0, 0}), ErrorCode::kContract);
}

// Brute force: walk up from each page to the first resident one.
PageId OracleFallback(const PageCache& cache, PageId id) {
  while (!cache.IsResident(id)) id = *Parent(id);
  return id;
}

void ExpectTableMatchesOracle(const PageCache& cache, const PageTable& table) {
  const IndirectionTable ind = IndirectionTable::Build(table);
  for (uint64_t abs = 0; abs < table.size(); ++abs) {
    const PageId id = FromAbs(abs, cache.meta().mip_count);
    const PageId fallback = OracleFallback(cache, id);
    const FrameCoord frame = cache.coord(*cache.FrameOf(fallback));
    ASSERT_EQ(table[abs].resident, fallback == id);
    ASSERT_EQ(table[abs].frame, frame);
    ASSERT_EQ(table[abs].source_mip, fallback.mip);
    ASSERT_EQ(ind[abs], (IndirectionTexel{frame.fx, frame.fy, fallback.mip}));
  }
}

TEST(PageTableTest, RootOnlyPointsEverythingAtRoot) {
  PageCache cache(kMeta, 3, 3);
  cache.Insert(Payload(kMeta, {1, 0, 0}));
  cache.Evict({1, 0, 0});
  cache.Insert(Payload(kMeta, {0, 0, 0}));
  PageTable table(kMeta);
  table.Update(cache);
  const FrameCoord root = cache.coord(*cache.FrameOf({0, 0, 0}));
  const IndirectionTable ind = IndirectionTable::Build(table);
  for (uint64_t abs = 0; abs < table.size(); ++abs) {
    EXPECT_EQ(table[abs].frame, root);
    EXPECT_EQ(ind[abs].b, 0u);
  }
}

TEST(PageTableTest, EvictedPageInheritsParentFrame) {
  PageCache cache(kMeta, 4, 4);
  cache.Insert(Payload(kMeta, {0, 0, 0}));
  cache.Insert(Payload(kMeta, {1, 1, 0}));
  cache.Insert(Payload(kMeta, {2, 2, 1}));
  PageTable table(kMeta);
  table.Update(cache);
  EXPECT_TRUE(table.at({2, 2, 1}).resident);
  cache.Evict({2, 2, 1});
  table.Update(cache);
  EXPECT_FALSE(table.at({2, 2, 1}).resident);
  EXPECT_EQ(table.at({2, 2, 1}).frame, cache.coord(*cache.FrameOf({1, 1, 0})));
  EXPECT_EQ(table.at({2, 2, 1}).source_mip, 1u);
  ExpectTableMatchesOracle(cache, table);
}

TEST(PageTableTest, FullResidencyMapsEachPageToItself) {
  PageCache cache(kMeta, 5, 5);
  for (uint64_t abs = 0; abs < 21; ++abs) cache.Insert(Payload(kMeta, FromAbs(abs, 3)));
  PageTable table(kMeta);
  table.Update(cache);
  const IndirectionTable ind = IndirectionTable::Build(table);
  for (uint64_t abs = 0; abs < 21; ++abs) EXPECT_EQ(ind[abs].b, FromAbs(abs, 3).mip);
}

TEST(PageTableTest, MissingRootIsContractViolation) {
  PageCache cache(kMeta, 2, 2);
  PageTable table(kMeta);
  EXPECT_VT_ERROR(table.Update(cache), ErrorCode::kContract);
}

// Random insert and evict scripts over pyramids of up to five levels.
TEST(PageTableTest, RandomScriptsMatchAncestorWalk) {
  std::mt19937_64 rng(17);
  for (uint32_t mips = 1; mips <= 5; ++mips) {
    const TextureMeta meta{4, 1, mips, 3};
    const uint64_t total = meta.total_pages();
    PageCache cache(meta, 4, 3);
    cache.Insert(Payload(meta, {0, 0, 0}));
    cache.Lock({0, 0, 0});
    PageTable table(meta);
    for (int step = 0; step < 300; ++step) {
      cache.BeginFrame();
      const PageId id = FromAbs(rng() % total, mips);
      if (rng() % 3 == 0) {
        if (id.mip > 0) cache.Evict(id);
      } else {
        cache.Insert(Payload(meta, id));
      }
      table.Update(cache);
      ExpectTableMatchesOracle(cache, table);

      // Occupied frames and resident pages are in one-to-one correspondence.
      std::set<uint64_t> seen;
      for (uint32_t f = 0; f < cache.frame_count(); ++f) {
        const auto& page = cache.slot(f).page;
        if (!page) continue;
        ASSERT_TRUE(seen.insert(AbsIndex(*page, mips)).second);
        ASSERT_EQ(cache.FrameOf(*page), f);
      }
      ASSERT_EQ(seen.size(), cache.resident_count());
    }
  }
}

class RuntimeTest : public ::testing::Test {
 protected:
  RuntimeTest() : chain_(BuildChain(RandomImage(128, 128, 3), 8, 1)), source_(chain_) {}
  MipChain chain_;  // 5 mips, 341 pages
  ChainPageSource source_;
};

TEST_F(RuntimeTest, RootIsLoadedAndLocked) {
  VirtualTextureRuntime rt(source_, 4, 4);
  EXPECT_TRUE(rt.cache().IsResident({0, 0, 0}));
  EXPECT_EQ(rt.cache().locked_count(), 1u);
  EXPECT_EQ(rt.indirection().size(), 341u);
}

TEST_F(RuntimeTest, LockMips) {
  VirtualTextureRuntime four(source_, 10, 10);
  four.LockMips(4);
  EXPECT_EQ(four.cache().locked_count(), 85u);
  EXPECT_EQ(four.cache().resident_count(), 85u);

  VirtualTextureRuntime one(source_, 2, 2);
  one.LockMips(1);
  EXPECT_EQ(one.cache().locked_count(), 1u);

  VirtualTextureRuntime small(source_, 8, 8);
  EXPECT_VT_ERROR(small.LockMips(4), ErrorCode::kCapacity);
  EXPECT_VT_ERROR(small.LockMips(6), ErrorCode::kDomain);
}

TEST_F(RuntimeTest, LockedPagesSurviveInsertStorm) {
  VirtualTextureRuntime rt(source_, 6, 4);
  rt.LockMips(3);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    rt.cache().BeginFrame();
    rt.Load(FromAbs(21 + rng() % 320, 5));
  }
  for (uint64_t abs = 0; abs < 21; ++abs) EXPECT_TRUE(rt.cache().IsResident(FromAbs(abs, 5)));
  EXPECT_EQ(rt.cache().resident_count(), 24u);
}

TEST_F(RuntimeTest, LoadedPageLandsInPhysicalTexture) {
  VirtualTextureRuntime rt(source_, 4, 4);
  const PageId id{3, 5, 2};
  rt.Load(id);
  rt.Commit();
  const FrameCoord frame = rt.cache().coord(*rt.cache().FrameOf(id));
  const PagePayload page = source_.ReadPage(AbsIndex(id, 5));
  const int stored = 10;
  for (int y = 0; y < stored; ++y) {
    for (int x = 0; x < stored; ++x) {
      const size_t i = (static_cast<size_t>(y) * stored + x) * 3;
      ASSERT_EQ(rt.cache().texel(frame, x, y),
                (Rgb8{page.pixels[i], page.pixels[i + 1], page.pixels[i + 2]}));
    }
  }
  EXPECT_EQ(rt.indirection()[AbsIndex(id, 5)], (IndirectionTexel{frame.fx, frame.fy, 3}));
}

}  // namespace
}  // namespace vtlab
