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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vtlab/build.h"
#include "vtlab/error.h"
#include "vtlab/heuristics.h"
#include "vtlab/metrics.h"
#include "vtlab/page.h"
#include "vtlab/png_io.h"
#include "vtlab/render.h"
#include "vtlab/runtime.h"
#include "vtlab/sampler.h"
#include "vtlab/simulate.h"
#include "vtlab/stream_queue.h"
#include "vtlab/vtx_file.h"
#include "vtlab_testing/scenes.h"

namespace vtlab {
namespace {

using testing::IndoorOptions;
using testing::IndoorScene;
using testing::LabScene;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string Format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

// Tolerances and limits.
constexpr double kAddressingSeconds = 1.0;
constexpr double kFileFormatSeconds = 30.0;
constexpr double kRendererSeconds = 60.0;
constexpr double kLodTolerance = 1e-4;
constexpr double kSsimOracleTolerance = 1e-9;
constexpr double kHeuristicSeconds = 300.0;
constexpr double kMonotoneSlack = 1e-12;

// Shared scenes.
const Viewport kViewport{256, 256};

// Small pages give a 256 x 256 view a working set well above the budget.
constexpr uint32_t kStreamingPageSize = 16;

const LabScene& Indoor4k() {
  static const LabScene scene = [] {
    IndoorOptions options;
    options.page_size = kStreamingPageSize;
    return IndoorScene(options);
  }();
  return scene;
}

const LabScene& Indoor1k() {
  static const LabScene scene = [] {
    IndoorOptions options;
    options.texture_dim = 1024;
    return IndoorScene(options);
  }();
  return scene;
}

SimResult Run(const LabScene& scene, const std::vector<Camera>& path,
              const SimConfig& config, const HeuristicConfig& heuristic,
              const NoiseTable* noise = nullptr) {
  const ChainPageSource source(scene.chain);
  SimInputs inputs;
  inputs.scene = &scene.mesh;
  inputs.path = &path;
  inputs.viewport = kViewport;
  inputs.source = &source;
  inputs.noise = noise;
  return Simulate(inputs, config, heuristic);
}

std::vector<double> SsimSeries(const std::vector<RgbImage>& reference,
                               const std::vector<RgbImage>& frames) {
  std::vector<double> out;
  for (const QualityRecord& r : Report(reference, frames)) out.push_back(r.ssim);
  return out;
}

double Mean(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return v.empty() ? 0.0 : sum / v.size();
}

// 1. Addressing over a 6-level pyramid.
Outcome Addressing() {
  const auto start = std::chrono::steady_clock::now();
  constexpr uint32_t kMips = 6;
  const uint64_t total = TotalPages(kMips);
  uint64_t failures = 0;
  for (uint64_t abs = 0; abs < total; ++abs) {
    const PageId id = FromAbs(abs, kMips);
    if (AbsIndex(id, kMips) != abs) ++failures;
    // Independent decomposition: strip whole levels, then split the rest.
    uint64_t rel = abs;
    uint32_t mip = 0;
    while (rel >= (uint64_t{1} << (2 * mip))) rel -= uint64_t{1} << (2 * mip++);
    const uint64_t side = uint64_t{1} << mip;
    if (id.mip != mip || id.x != rel % side || id.y != rel / side) ++failures;
    const PageXY xy = RelToXY(rel, mip);
    if (XYToRel(xy.x, xy.y, mip) != rel) ++failures;
    if (mip == 0) {
      if (Parent(id).has_value()) ++failures;
    } else {
      const auto parent = Parent(id);
      const auto siblings = Children(*parent, kMips);
      if (!parent || std::find(siblings.begin(), siblings.end(), id) == siblings.end()) {
        ++failures;
      }
    }
    if (Ancestors(id).size() != id.mip) ++failures;
    if (mip + 1 < kMips) {
      for (const PageId& child : Children(id, kMips)) {
        if (Parent(child) != id) ++failures;
      }
    } else if (!Children(id, kMips).empty()) {
      ++failures;
    }
  }
  const double secs = Seconds(start);
  return {total == 1365 && failures == 0 && secs < kAddressingSeconds,
          Format("%llu pages, %llu failures, %.3f s (limit %.0f s)",
                 static_cast<unsigned long long>(total),
                 static_cast<unsigned long long>(failures), secs,
                 kAddressingSeconds)};
}

// 2. File format roundtrip for a 2048^2 texture.
Outcome FileFormat() {
  const auto start = std::chrono::steady_clock::now();
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "vtlab_acceptance_c2";
  std::filesystem::create_directories(dir);
  WritePng(dir / "source.png", testing::DetailTexture(2048, 2048, 7));
  LayoutFile layout;
  layout.target_dim = 2048;
  layout.placements.push_back({"source.png", 0, 0});
  const BuildResult built =
      BuildVirtualTexture(layout, dir, 128, 4, dir / "t.vtx", dir / "t.vtn");

  const MipChain chain = BuildChain(ReadPng(dir / "source.png"), 128, 4);
  const VtxReader reader(dir / "t.vtx");
  std::ifstream raw(dir / "t.vtx", std::ios::binary);
  uint64_t mismatches = 0;
  uint64_t offset_errors = 0;
  const uint64_t stride = 136ull * 136ull * 3ull;
  for (uint64_t abs = 0; abs < built.pages; ++abs) {
    const PagePayload expected = CutPage(chain, FromAbs(abs, built.meta.mip_count));
    if (reader.ReadPage(abs).pixels != expected.pixels) ++mismatches;
    const uint64_t offset = PageFileOffset(built.meta, abs);
    if (offset != 64 + stride * abs) ++offset_errors;
    std::vector<uint8_t> bytes(expected.pixels.size());
    raw.seekg(static_cast<std::streamoff>(offset));
    raw.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
    if (!raw || bytes != expected.pixels) ++offset_errors;
  }
  const uint64_t file_size = std::filesystem::file_size(dir / "t.vtx");
  const bool sized = file_size == 64 + stride * built.pages;
  std::filesystem::remove_all(dir);
  const double secs = Seconds(start);
  const bool pass = built.meta.mip_count == 5 && built.pages == 341 &&
                    mismatches == 0 && offset_errors == 0 && sized &&
                    secs < kFileFormatSeconds;
  return {pass, Format("%u mips, %llu pages, %llu payload mismatches, %llu offset "
                       "errors, %.2f s (limit %.0f s)",
                       built.meta.mip_count,
                       static_cast<unsigned long long>(built.pages),
                       static_cast<unsigned long long>(mismatches),
                       static_cast<unsigned long long>(offset_errors), secs,
                       kFileFormatSeconds)};
}

// 3. Cache renderer against the direct mip-chain renderer.
Outcome RendererOracle() {
  const auto start = std::chrono::steady_clock::now();
  const LabScene& scene = Indoor1k();
  const std::vector<Camera> fly = testing::IndoorFlythrough(120);
  std::vector<Camera> path;
  for (int i = 0; i < 16; ++i) path.push_back(fly[i * 7]);

  const ChainPageSource source(scene.chain);
  VirtualTextureRuntime runtime(source, 19, 19);
  for (uint64_t abs = 1; abs < scene.chain.meta.total_pages(); ++abs) {
    runtime.Load(FromAbs(abs, scene.chain.meta.mip_count));
  }
  runtime.Commit();
  const VirtualSampler cached(runtime.cache(), runtime.indirection());
  const ChainSampler direct(scene.chain);

  uint64_t nearest_diff = 0;
  int bilinear_max = 0;
  std::set<uint32_t> mips;
  for (const Camera& camera : path) {
    const FrameBuffers a =
        RenderFrame(scene.mesh, camera, kViewport, cached, FilterMode::kNearest);
    const FrameBuffers b =
        RenderFrame(scene.mesh, camera, kViewport, direct, FilterMode::kNearest);
    for (size_t i = 0; i < a.color.bytes().size(); ++i) {
      if (a.color.bytes()[i] != b.color.bytes()[i]) ++nearest_diff;
    }
    for (const auto& need : a.need) {
      if (need) mips.insert(need->mip);
    }
    const FrameBuffers c =
        RenderFrame(scene.mesh, camera, kViewport, cached, FilterMode::kBilinear);
    const FrameBuffers d =
        RenderFrame(scene.mesh, camera, kViewport, direct, FilterMode::kBilinear);
    for (size_t i = 0; i < c.color.bytes().size(); ++i) {
      bilinear_max = std::max(bilinear_max, std::abs(int(c.color.bytes()[i]) -
                                                     int(d.color.bytes()[i])));
    }
  }
  const double secs = Seconds(start);
  return {nearest_diff == 0 && bilinear_max == 0 && secs < kRendererSeconds,
          Format("16 frames at 256x256, %zu distinct mips, nearest differing "
                 "bytes %llu, bilinear max difference %d, %.2f s (limit %.0f s)",
                 mips.size(), static_cast<unsigned long long>(nearest_diff),
                 bilinear_max, secs, kRendererSeconds)};
}

// 4. LOD of a screen-aligned 512 x 512 quad over a 32768^2 texture.
Outcome LodAnalytic() {
  SceneMesh mesh;
  mesh.textures = {"quad.png"};
  testing::AddQuad(mesh, {-1, 1, -1}, {1, 1, -1}, {-1, -1, -1}, {1, -1, -1},
                   {0, 0, 1, 1}, 1.0);
  Camera camera;
  camera.fov_y = DegToRad(90.0);
  TextureMeta meta;
  meta.page_size = 128;
  meta.mip_count = 9;
  const FragmentBuffer fragments = Rasterize(mesh, camera, {512, 512});
  double worst_d = 0.0;
  uint64_t wrong_level = 0;
  uint64_t interior = 0;
  for (int y = 1; y < 511; ++y) {
    for (int x = 1; x < 511; ++x) {
      const Fragment& f = fragments.at(x, y);
      if (!f.covered) {
        ++wrong_level;
        continue;
      }
      ++interior;
      const MipSelection lod = ComputeMip(f.dsdx, f.dtdx, f.dsdy, f.dtdy,
                                          meta.dim_max(), meta.max_mip());
      worst_d = std::max(worst_d, std::abs(lod.d - 6.0));
      if (lod.page_mip != 2) ++wrong_level;
    }
  }
  const FrameBuffers need = RenderNeed(mesh, camera, {512, 512}, meta);
  for (const auto& n : need.need) {
    if (!n || n->mip != 2) ++wrong_level;
  }
  return {wrong_level == 0 && worst_d < kLodTolerance,
          Format("dim_max %llu, %llu interior pixels, max |d - 6| = %.3g "
                 "(tolerance %.0e), %llu pixels off level 2",
                 static_cast<unsigned long long>(meta.dim_max()),
                 static_cast<unsigned long long>(interior), worst_d,
                 kLodTolerance, static_cast<unsigned long long>(wrong_level))};
}

// 5. Page table against a brute-force ancestor walk.
Outcome PageTableOracle() {
  const MipChain chain =
      BuildChain(testing::RandomImage(64, 64, 5), /*page_size=*/4, /*border=*/1);
  const ChainPageSource source(chain);
  const uint32_t mips = chain.meta.mip_count;
  const uint64_t total = chain.meta.total_pages();
  std::mt19937_64 rng(20261017);
  uint64_t checks = 0;
  uint64_t failures = 0;
  for (int script = 0; script < 1000; ++script) {
    VirtualTextureRuntime runtime(source, 8, 8);
    const int steps = 10 + static_cast<int>(rng() % 30);
    for (int step = 0; step < steps; ++step) {
      const PageId id = FromAbs(rng() % total, mips);
      if (rng() % 3 == 0) {
        if (id.mip != 0) runtime.cache().Evict(id);
      } else {
        runtime.cache().BeginFrame();
        runtime.Load(id);
      }
      runtime.Commit();
      const PageCache& cache = runtime.cache();
      for (uint64_t abs = 0; abs < total; ++abs) {
        PageId walk = FromAbs(abs, mips);
        while (!cache.IsResident(walk)) walk = *Parent(walk);
        const PageTableEntry& entry = runtime.page_table()[abs];
        const FrameCoord frame = cache.coord(*cache.FrameOf(walk));
        const bool own = walk == FromAbs(abs, mips);
        ++checks;
        if (entry.resident != own || entry.source_mip != walk.mip ||
            !(entry.frame == frame)) {
          ++failures;
        }
        const IndirectionTexel& texel = runtime.indirection()[abs];
        if (texel.r != frame.fx || texel.g != frame.fy || texel.b != walk.mip) {
          ++failures;
        }
      }
    }
  }
  return {failures == 0,
          Format("1000 scripts on a %u-level pyramid, %llu entry checks, %llu "
                 "mismatches",
                 mips, static_cast<unsigned long long>(checks),
                 static_cast<unsigned long long>(failures))};
}

// Direct-formula SSIM: every window, two-pass moments on Rec. 601 luma.
double DirectSsim(const RgbImage& x, const RgbImage& y, int n) {
  const double c1 = (255.0 * 0.01) * (255.0 * 0.01);
  const double c2 = (255.0 * 0.03) * (255.0 * 0.03);
  double total = 0.0;
  int windows = 0;
  for (int r = 0; r + n <= x.height(); ++r) {
    for (int c = 0; c + n <= x.width(); ++c) {
      double mx = 0, my = 0;
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          mx += Luminance(x.at(c + i, r + j));
          my += Luminance(y.at(c + i, r + j));
        }
      }
      mx /= n * n;
      my /= n * n;
      double vx = 0, vy = 0, cov = 0;
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          const double a = Luminance(x.at(c + i, r + j)) - mx;
          const double b = Luminance(y.at(c + i, r + j)) - my;
          vx += a * a;
          vy += b * b;
          cov += a * b;
        }
      }
      vx /= n * n;
      vy /= n * n;
      cov /= n * n;
      total += ((2 * mx * my + c1) * (2 * cov + c2)) /
               ((mx * mx + my * my + c1) * (vx + vy + c2));
      ++windows;
    }
  }
  return total / windows;
}

// 6. Metrics against the direct formula.
Outcome MetricsOracle() {
  double worst = 0.0;
  int identity_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const RgbImage x = testing::RandomImage(16, 16, 1000 + i);
    // Half the pairs are correlated so the structure term is exercised.
    RgbImage y = testing::RandomImage(16, 16, 5000 + i);
    if (i % 2 == 0) {
      for (size_t k = 0; k < y.bytes().size(); ++k) {
        y.bytes()[k] = static_cast<uint8_t>((x.bytes()[k] * 3 + y.bytes()[k]) / 4);
      }
    }
    worst = std::max(worst, std::abs(Ssim(x, y) - DirectSsim(x, y, 8)));
    if (Ssim(x, x) != 1.0 || Rmse(x, x) != 0.0 || Ssim(y, y) != 1.0) {
      ++identity_failures;
    }
  }
  const RgbImage anchor = testing::DetailTexture(64, 64, 3);
  const bool figure = Mse(anchor, anchor) == 0.0 && Ssim(anchor, anchor) == 1.0;
  return {worst <= kSsimOracleTolerance && identity_failures == 0 && figure,
          Format("100 random 16x16 pairs, max |ssim - direct| = %.3g (tolerance "
                 "%.0e), identity failures %d, identical-image anchor MSE 0 / "
                 "SSIM 1.0 %s",
                 worst, kSsimOracleTolerance, identity_failures,
                 figure ? "reproduced" : "NOT reproduced")};
}

// 7. PixelSum beats Random at 5 pages per frame.
Outcome HeuristicTrend() {
  const auto start = std::chrono::steady_clock::now();
  const LabScene& scene = Indoor4k();
  const std::vector<Camera> path = testing::IndoorFlythrough(120);
  const std::vector<RgbImage> reference =
      testing::RenderReference(scene, path, kViewport, FilterMode::kNearest);
  SimConfig config;
  config.budget = 5;
  HeuristicConfig pixel_sum;
  pixel_sum.kind = HeuristicKind::kPixelSum;
  const double ps = Mean(SsimSeries(reference, Run(scene, path, config, pixel_sum).frames));
  std::string gaps;
  double worst_gap = 1.0;
  double random_sum = 0.0;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    HeuristicConfig random;
    random.kind = HeuristicKind::kRandom;
    random.seed = seed;
    const double r = Mean(SsimSeries(reference, Run(scene, path, config, random).frames));
    random_sum += r;
    worst_gap = std::min(worst_gap, ps - r);
    gaps += Format("%s%.4f", seed == 1 ? "" : " ", ps - r);
  }
  const double secs = Seconds(start);
  return {worst_gap > 0.0 && secs < kHeuristicSeconds,
          Format("mean SSIM PixelSum %.4f, Random %.4f (5 seeds), per-seed gaps "
                 "[%s], %.1f s (limit %.0f s)",
                 ps, random_sum / 5.0, gaps.c_str(), secs, kHeuristicSeconds)};
}

// Pixels whose wanted page lies entirely inside a uniform region.
bool UniformVisible(const LabScene& scene, const Camera& camera) {
  const TextureMeta& meta = scene.chain.meta;
  const FrameBuffers need = RenderNeed(scene.mesh, camera, kViewport, meta);
  const double dim = static_cast<double>(meta.dim_max());
  for (const auto& n : need.need) {
    if (!n) continue;
    const double extent = dim / double(uint64_t{1} << n->mip);
    const double x0 = n->x * extent, y0 = n->y * extent;
    for (const testing::TexRect& r : scene.uniform_regions) {
      if (x0 >= r.x0 && y0 >= r.y0 && x0 + extent <= r.x1 && y0 + extent <= r.y1) {
        return true;
      }
    }
  }
  return false;
}

// 8. NoiseValue scaling on a scene with a flat floor.
Outcome NoiseTrend() {
  IndoorOptions options;
  options.page_size = kStreamingPageSize;
  options.uniform_floor = true;
  const LabScene scene = IndoorScene(options);
  const NoiseTable noise = ComputeNoise(scene.chain);
  const std::vector<Camera> path = testing::IndoorFlythrough(120);
  const std::vector<RgbImage> reference =
      testing::RenderReference(scene, path, kViewport, FilterMode::kNearest);
  SimConfig config;
  config.budget = 5;
  HeuristicConfig plain;
  plain.kind = HeuristicKind::kWeightedPixel;
  HeuristicConfig scaled = plain;
  scaled.noise_scaling = true;
  const std::vector<double> a =
      SsimSeries(reference, Run(scene, path, config, plain, &noise).frames);
  const std::vector<double> b =
      SsimSeries(reference, Run(scene, path, config, scaled, &noise).frames);
  int visible = 0;
  int better = 0;
  for (size_t f = 0; f < path.size(); ++f) {
    if (!UniformVisible(scene, path[f])) continue;
    ++visible;
    if (b[f] > a[f]) ++better;
  }
  const double share = visible == 0 ? 0.0 : double(better) / visible;
  return {Mean(b) >= Mean(a) && visible > 0 && share >= 0.8,
          Format("mean SSIM scaled %.4f vs plain %.4f; strictly better on %d of %d "
                 "frames showing the flat region (%.0f%%, need 80%%)",
                 Mean(b), Mean(a), better, visible, 100.0 * share)};
}

// 9. LookAhead during a sustained turn and after a snap.
Outcome LookaheadTrend() {
  const LabScene& scene = Indoor4k();
  const testing::RotationPath path = testing::RotationTestPath();
  const std::vector<RgbImage> reference =
      testing::RenderReference(scene, path.cameras, kViewport, FilterMode::kNearest);
  SimConfig config;
  config.budget = 5;
  HeuristicConfig hotspot;
  hotspot.kind = HeuristicKind::kHotSpot;
  HeuristicConfig ahead = hotspot;
  ahead.lookahead = true;
  const std::vector<double> a =
      SsimSeries(reference, Run(scene, path.cameras, config, hotspot).frames);
  const std::vector<double> b =
      SsimSeries(reference, Run(scene, path.cameras, config, ahead).frames);
  double drop_a = 0.0, drop_b = 0.0;
  for (int f = path.turn_begin; f < path.turn_end; ++f) {
    drop_a = std::max(drop_a, 1.0 - a[f]);
    drop_b = std::max(drop_b, 1.0 - b[f]);
  }
  const int after = path.snap_frame + 1;
  return {drop_b < drop_a && b[after] < a[after],
          Format("worst-frame SSIM drop during the turn: HotSpot %.4f, with "
                 "LookAhead %.4f; frame after the 45 degree snap: HotSpot %.4f, "
                 "with LookAhead %.4f",
                 drop_a, drop_b, a[after], b[after])};
}

// 10. Ancestor ordering and mip locking.
Outcome AncestorOrdering() {
  IndoorOptions options;
  options.texture_dim = 2048;
  const LabScene scene = IndoorScene(options);
  const std::vector<Camera> path = testing::IndoorFlythrough(60);
  const uint32_t mips = scene.chain.meta.mip_count;
  SimConfig config;
  config.budget = 5;
  config.initial_mips = 0;
  config.preload_visible = false;
  config.frames_x = 40;
  config.frames_y = 40;  // holds all 1365 pages, so nothing is evicted
  HeuristicConfig heuristic;
  heuristic.kind = HeuristicKind::kPixelSum;

  config.ancestor = AncestorStrategy::kExtern;
  const SimResult ext = Run(scene, path, config, heuristic);
  int extern_violations = 0;
  for (size_t i = 1; i < ext.log.size(); ++i) {
    if (ext.log[i].frame == ext.log[i - 1].frame && ext.log[i].mip < ext.log[i - 1].mip) {
      ++extern_violations;
    }
  }

  // Every ancestor of a loaded page is the root or was loaded earlier: with
  // no evictions, anything else would have been queued and skipped.
  config.ancestor = AncestorStrategy::kIntern;
  const SimResult intern = Run(scene, path, config, heuristic);
  std::set<uint64_t> loaded = {0};
  int intern_violations = 0;
  for (const StreamLogEntry& e : intern.log) {
    for (const PageId& a : Ancestors(FromAbs(e.abs, mips))) {
      if (loaded.count(AbsIndex(a, mips)) == 0) ++intern_violations;
    }
    loaded.insert(e.abs);
  }

  const ChainPageSource source(scene.chain);
  VirtualTextureRuntime runtime(source, 32, 32);
  runtime.LockMips(4);
  const uint32_t locked = runtime.cache().locked_count();

  config.ancestor = AncestorStrategy::kExtern;
  config.lock_mips = 4;
  const SimResult locked_run = Run(scene, path, config, heuristic);
  const uint32_t first_mip = locked_run.log.empty() ? 0 : locked_run.log.front().mip;

  return {extern_violations == 0 && intern_violations == 0 && locked == 85 &&
              !locked_run.log.empty() && first_mip >= 4 && !ext.log.empty() &&
              !intern.log.empty(),
          Format("Extern: %zu loads, %d mip order violations; Intern: %zu loads, "
                 "%d early loads; lock_mips(4) pins %u pages; locked Extern run "
                 "first loads mip %u",
                 ext.log.size(), extern_violations, intern.log.size(),
                 intern_violations, locked, first_mip)};
}

// 11. Static camera, one page per frame.
Outcome StaticConvergence() {
  const LabScene& scene = Indoor1k();
  const TextureMeta& meta = scene.chain.meta;
  const Camera camera = testing::IndoorFlythrough(1).front();
  const FrameBuffers need = RenderNeed(scene.mesh, camera, kViewport, meta);
  std::set<uint64_t> needed, closure;
  for (const auto& n : need.need) {
    if (!n) continue;
    needed.insert(AbsIndex(*n, meta.mip_count));
    closure.insert(AbsIndex(*n, meta.mip_count));
    for (const PageId& a : Ancestors(*n)) closure.insert(AbsIndex(a, meta.mip_count));
  }
  // The root is resident from the start.
  needed.erase(0);
  closure.erase(0);

  const size_t frames = closure.size() + 2;
  const std::vector<Camera> path(frames, camera);
  const RgbImage reference =
      testing::RenderReference(scene, {camera}, kViewport, FilterMode::kNearest).front();
  SimConfig config;
  config.budget = 1;
  config.initial_mips = 0;
  config.preload_visible = false;
  HeuristicConfig heuristic;
  heuristic.kind = HeuristicKind::kPixelSum;

  const auto first_exact = [&](const SimResult& run) -> long {
    for (size_t f = 0; f < run.frames.size(); ++f) {
      if (run.frames[f] == reference) return static_cast<long>(f);
    }
    return -1;
  };
  const SimResult plain = Run(scene, path, config, heuristic);
  config.ancestor = AncestorStrategy::kExtern;
  const SimResult ext = Run(scene, path, config, heuristic);
  const long plain_exact = first_exact(plain);
  const long ext_exact = first_exact(ext);

  const std::vector<RgbImage> refs(frames, reference);
  const std::vector<double> series = SsimSeries(refs, ext.frames);
  int decreases = 0;
  for (size_t f = 1; f < series.size(); ++f) {
    if (series[f] < series[f - 1] - kMonotoneSlack) ++decreases;
  }
  const bool pass = plain_exact >= 0 && plain_exact <= long(needed.size()) &&
                    ext_exact >= 0 && ext_exact <= long(closure.size()) &&
                    decreases == 0;
  return {pass,
          Format("%zu needed pages (%zu with ancestors); exact at frame %ld "
                 "without and %ld with ExternMipMapOrder; %d SSIM decreases under "
                 "ExternMipMapOrder",
                 needed.size(), closure.size(), plain_exact, ext_exact, decreases)};
}

}  // namespace
}  // namespace vtlab

int main() {
  using vtlab::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"addressing", vtlab::Addressing},
      {"file format", vtlab::FileFormat},
      {"renderer oracle", vtlab::RendererOracle},
      {"LOD analytic", vtlab::LodAnalytic},
      {"page table oracle", vtlab::PageTableOracle},
      {"metrics oracle", vtlab::MetricsOracle},
      {"heuristic trend", vtlab::HeuristicTrend},
      {"NoiseValue trend", vtlab::NoiseTrend},
      {"LookAhead trend", vtlab::LookaheadTrend},
      {"ancestor ordering", vtlab::AncestorOrdering},
      {"static convergence", vtlab::StaticConvergence},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::printf("criterion %2zu %-20s %s  %s\n", i + 1, criteria[i].first,
                outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
