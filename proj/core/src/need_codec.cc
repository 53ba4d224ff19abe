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

#include "vtlab/need_codec.h"

#include "vtlab/error.h"

namespace vtlab {

Need8 EncodeNeed8(uint32_t x, uint32_t y, uint32_t mip) {
  if (x >= 4096 || y >= 4096 || mip >= 256) {
    throw VtError(ErrorCode::kOverflow,
                  "page coordinates do not fit the 8-bit need encoding");
  }
  return {static_cast<uint8_t>(x % 256), static_cast<uint8_t>(y % 256),
          static_cast<uint8_t>(mip),
          static_cast<uint8_t>(x / 256 + (y / 256) * 16)};
}

PageId DecodeNeed8(Need8 texel) {
  return {texel.b, texel.r + 256u * (texel.a % 16u),
          texel.g + 256u * (texel.a / 16u)};
}

Need32 EncodeNeed32(uint32_t x, uint32_t y, uint32_t mip) { return {x, y, mip}; }

PageId DecodeNeed32(Need32 texel) { return {texel.b, texel.r, texel.g}; }

}  // namespace vtlab
