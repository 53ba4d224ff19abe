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

#include "vtlab/sampler.h"

#include <algorithm>
#include <cmath>

#include "vtlab/error.h"

namespace vtlab {

std::string FilterModeName(FilterMode mode) {
  switch (mode) {
    case FilterMode::kNearest:
      return "nearest";
    case FilterMode::kBilinear:
      return "bilinear";
    case FilterMode::kTrilinear:
      return "trilinear";
  }
  return "unknown";
}

FilterMode ParseFilterMode(const std::string& name) {
  if (name == "nearest") return FilterMode::kNearest;
  if (name == "bilinear") return FilterMode::kBilinear;
  if (name == "trilinear") return FilterMode::kTrilinear;
  throw VtError(ErrorCode::kConfig, "unknown filter mode '" + name + "'");
}

MipSelection ComputeMip(double dsdx, double dtdx, double dsdy, double dtdy,
                        uint64_t dim_max, uint32_t max_mip) {
  MipSelection out;
  const double ex = std::sqrt(dsdx * dsdx + dtdx * dtdx);
  const double ey = std::sqrt(dsdy * dsdy + dtdy * dtdy);
  const double e_max = std::max(ex, ey);
  const double top = static_cast<double>(max_mip);
  if (!(e_max > 0.0) || !std::isfinite(e_max)) {
    // No measurable footprint: treat as magnified.
    out.d = 0.0;
  } else {
    out.d = std::clamp(std::log2(e_max * static_cast<double>(dim_max)), 0.0, top);
  }
  out.level = top - out.d;
  // The epsilon keeps exact power-of-two footprints from flooring one level
  // low because of rounding in log2.
  const double floored = std::floor(out.level + 1e-9);
  out.page_mip = static_cast<uint32_t>(std::clamp(floored, 0.0, top));
  out.blend = std::clamp(out.level - out.page_mip, 0.0, 1.0);
  return out;
}

double SnapCoord(double s) {
  if (!(s > 0.0)) return 0.0;
  if (s >= 1.0) return 1.0;
  constexpr double kScale = 4294967296.0;  // 2^32
  return std::nearbyint(s * kScale) / kScale;
}

PageId IdentifyPage(double s, double t, uint32_t mip) {
  const double n = std::ldexp(1.0, static_cast<int>(mip));
  const uint32_t last = (uint32_t{1} << mip) - 1;
  const auto cell = [&](double v) {
    const double f = std::floor(std::clamp(v, 0.0, 1.0) * n);
    return std::min(static_cast<uint32_t>(f), last);
  };
  return {mip, cell(s), cell(t)};
}

Rgbf BlendBilinear(Rgb8 c00, Rgb8 c10, Rgb8 c01, Rgb8 c11, double fx,
                   double fy) {
  Rgbf out;
  for (int c = 0; c < 3; ++c) {
    const double top = (1.0 - fx) * c00[c] + fx * c10[c];
    const double bottom = (1.0 - fx) * c01[c] + fx * c11[c];
    out[c] = (1.0 - fy) * top + fy * bottom;
  }
  return out;
}

Rgb8 Quantize(const Rgbf& c) {
  return {QuantizeChannel(c[0]), QuantizeChannel(c[1]), QuantizeChannel(c[2])};
}

Rgb8 TextureSampler::Sample(double s, double t, const MipSelection& lod,
                            FilterMode mode) const {
  s = SnapCoord(s);
  t = SnapCoord(t);
  switch (mode) {
    case FilterMode::kNearest:
      return Quantize(SampleLevel(s, t, lod.page_mip, false));
    case FilterMode::kBilinear:
      return Quantize(SampleLevel(s, t, lod.page_mip, true));
    case FilterMode::kTrilinear: {
      const Rgbf lo = SampleLevel(s, t, lod.page_mip, true);
      if (lod.page_mip >= meta().max_mip() || lod.blend <= 0.0) {
        return Quantize(lo);
      }
      const Rgbf hi = SampleLevel(s, t, lod.page_mip + 1, true);
      Rgbf mixed;
      for (int c = 0; c < 3; ++c) {
        mixed[c] = (1.0 - lod.blend) * lo[c] + lod.blend * hi[c];
      }
      return Quantize(mixed);
    }
  }
  return {0, 0, 0};
}

namespace {

Rgbf ToRgbf(Rgb8 c) { return {double(c[0]), double(c[1]), double(c[2])}; }

}  // namespace

VirtualSampler::VirtualSampler(const PageCache& cache,
                               const IndirectionTable& indirection)
    : cache_(cache), indirection_(indirection) {}

Rgbf VirtualSampler::SampleLevel(double s, double t, uint32_t mip,
                                 bool bilinear) const {
  const TextureMeta& meta = cache_.meta();
  const PageId wanted = IdentifyPage(s, t, mip);
  const uint64_t abs = AbsIndex(wanted, meta.mip_count);
  if (abs >= indirection_.size()) {
    throw VtError(ErrorCode::kContract, "indirection table not initialized");
  }
  const IndirectionTexel& entry = indirection_[abs];
  const uint32_t source_mip = entry.b;
  const FrameCoord frame{entry.r, entry.g};

  // Page of the source mip and the position inside it, in page texels.
  const PageId source = IdentifyPage(s, t, source_mip);
  const double page = meta.page_size;
  const double u = (std::ldexp(s, static_cast<int>(source_mip)) - source.x) * page;
  const double v = (std::ldexp(t, static_cast<int>(source_mip)) - source.y) * page;
  const int border = static_cast<int>(meta.border);
  const int last = static_cast<int>(meta.stored_page_size()) - 1;
  const int interior_last = static_cast<int>(meta.page_size) - 1;

  if (!bilinear) {
    const int x = std::min(static_cast<int>(std::floor(u)), interior_last);
    const int y = std::min(static_cast<int>(std::floor(v)), interior_last);
    return ToRgbf(cache_.texel(frame, border + x, border + y));
  }
  const double uc = u - 0.5;
  const double vc = v - 0.5;
  const double x0f = std::floor(uc);
  const double y0f = std::floor(vc);
  const double fx = uc - x0f;
  const double fy = vc - y0f;
  // With border >= 1 every neighbour lies inside the frame; a borderless
  // texture falls back to clamping at the frame edge.
  const auto col = [&](double i) {
    return std::clamp(border + static_cast<int>(i), 0, last);
  };
  const int x0 = col(x0f), x1 = col(x0f + 1);
  const int y0 = col(y0f), y1 = col(y0f + 1);
  return BlendBilinear(cache_.texel(frame, x0, y0), cache_.texel(frame, x1, y0),
                       cache_.texel(frame, x0, y1), cache_.texel(frame, x1, y1),
                       fx, fy);
}

Rgbf ChainSampler::SampleLevel(double s, double t, uint32_t mip,
                               bool bilinear) const {
  const RgbImage& image = chain_.level(mip);
  const double dim = static_cast<double>(chain_.meta.mip_dim(mip));
  const double u = s * dim;
  const double v = t * dim;
  if (!bilinear) {
    const int64_t last = image.width() - 1;
    const int64_t x = std::min(static_cast<int64_t>(std::floor(u)), last);
    const int64_t y = std::min(static_cast<int64_t>(std::floor(v)), last);
    return ToRgbf(image.at(static_cast<int>(x), static_cast<int>(y)));
  }
  const double uc = u - 0.5;
  const double vc = v - 0.5;
  const double x0f = std::floor(uc);
  const double y0f = std::floor(vc);
  const auto x0 = static_cast<int64_t>(x0f);
  const auto y0 = static_cast<int64_t>(y0f);
  return BlendBilinear(image.at_clamped(x0, y0), image.at_clamped(x0 + 1, y0),
                       image.at_clamped(x0, y0 + 1),
                       image.at_clamped(x0 + 1, y0 + 1), uc - x0f, vc - y0f);
}

}  // namespace vtlab
