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

#ifndef VTLAB_NEED_CODEC_H_
#define VTLAB_NEED_CODEC_H_

// Need-buffer texel encodings. The 8-bit form packs page coordinates up to
// 4095 into four byte channels; the 32-bit form stores them directly.

#include <cstdint>

#include "vtlab/page.h"

namespace vtlab {

struct Need8 {
  uint8_t r = 0;
  uint8_t g = 0;
  uint8_t b = 0;
  uint8_t a = 0;
  friend bool operator==(const Need8&, const Need8&) = default;
};

struct Need32 {
  uint32_t r = 0;
  uint32_t g = 0;
  uint32_t b = 0;
  friend bool operator==(const Need32&, const Need32&) = default;
};

// r = x mod 256, g = y mod 256, b = mip, a = x / 256 + (y / 256) * 16.
// Throws kOverflow when x or y >= 4096 or mip >= 256.
Need8 EncodeNeed8(uint32_t x, uint32_t y, uint32_t mip);
PageId DecodeNeed8(Need8 texel);

Need32 EncodeNeed32(uint32_t x, uint32_t y, uint32_t mip);
PageId DecodeNeed32(Need32 texel);

}  // namespace vtlab

#endif  // VTLAB_NEED_CODEC_H_
