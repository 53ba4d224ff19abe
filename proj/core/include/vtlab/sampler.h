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

#ifndef VTLAB_SAMPLER_H_
#define VTLAB_SAMPLER_H_

// Shader emulation: level-of-detail selection, page identification and
// texture filtering, either through the page cache (VirtualSampler) or
// straight from a full mip chain (ChainSampler, the reference).

#include <array>
#include <cstdint>
#include <string>

#include "vtlab/build.h"
#include "vtlab/image.h"
#include "vtlab/page.h"
#include "vtlab/runtime.h"

namespace vtlab {

enum class FilterMode { kNearest, kBilinear, kTrilinear };

std::string FilterModeName(FilterMode mode);
// Accepts "nearest", "bilinear" and "trilinear"; throws kConfig otherwise.
FilterMode ParseFilterMode(const std::string& name);

struct MipSelection {
  double d = 0.0;         // log2 compression, clamped to [0, max_mip]
  double level = 0.0;     // max_mip - d
  uint32_t page_mip = 0;  // floor(level)
  double blend = 0.0;     // level - page_mip
};

// Edge-compression LOD from quad derivatives of (s, t).
MipSelection ComputeMip(double dsdx, double dtdx, double dsdy, double dtdy,
                        uint64_t dim_max, uint32_t max_mip);

// Clamps to [0, 1] and snaps to a multiple of 2^-32. Scaling a snapped
// coordinate by any power of two up to 2^21 is exact, so the cache path and
// the direct path compute identical texel positions.
double SnapCoord(double s);

// Page of mip `mip` containing (s, t); coordinates of 1.0 map to the last
// page.
PageId IdentifyPage(double s, double t, uint32_t mip);

using Rgbf = std::array<double, 3>;

// Fixed-order bilinear blend shared by both samplers.
Rgbf BlendBilinear(Rgb8 c00, Rgb8 c10, Rgb8 c01, Rgb8 c11, double fx,
                   double fy);
Rgb8 Quantize(const Rgbf& c);

class TextureSampler {
 public:
  virtual ~TextureSampler() = default;

  virtual const TextureMeta& meta() const = 0;

  // Filtered color of mip `mip` at snapped (s, t), before quantization.
  virtual Rgbf SampleLevel(double s, double t, uint32_t mip,
                           bool bilinear) const = 0;

  // Full lookup for one fragment.
  Rgb8 Sample(double s, double t, const MipSelection& lod,
              FilterMode mode) const;
};

// Reads through the indirection table and the physical cache texture. A
// page that is not resident is served from the frame its entry points at,
// i.e. its nearest resident ancestor.
class VirtualSampler : public TextureSampler {
 public:
  VirtualSampler(const PageCache& cache, const IndirectionTable& indirection);

  const TextureMeta& meta() const override { return cache_.meta(); }
  Rgbf SampleLevel(double s, double t, uint32_t mip,
                   bool bilinear) const override;

 private:
  const PageCache& cache_;
  const IndirectionTable& indirection_;
};

// Samples the mip images directly with clamp-to-edge addressing.
class ChainSampler : public TextureSampler {
 public:
  explicit ChainSampler(const MipChain& chain) : chain_(chain) {}

  const TextureMeta& meta() const override { return chain_.meta; }
  Rgbf SampleLevel(double s, double t, uint32_t mip,
                   bool bilinear) const override;

 private:
  const MipChain& chain_;
};

}  // namespace vtlab

#endif  // VTLAB_SAMPLER_H_
