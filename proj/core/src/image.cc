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

#include "vtlab/image.h"

#include <algorithm>
#include <cstring>

namespace vtlab {

RgbImage::RgbImage(int width, int height, Rgb8 fill)
    : width_(width),
      height_(height),
      data_(static_cast<size_t>(width) * height * 3) {
  for (size_t i = 0; i < data_.size(); i += 3) {
    data_[i] = fill[0];
    data_[i + 1] = fill[1];
    data_[i + 2] = fill[2];
  }
}

Rgb8 RgbImage::at_clamped(int64_t x, int64_t y) const {
  x = std::clamp<int64_t>(x, 0, width_ - 1);
  y = std::clamp<int64_t>(y, 0, height_ - 1);
  return at(static_cast<int>(x), static_cast<int>(y));
}

void RgbImage::Blit(const RgbImage& src, int x, int y) {
  for (int row = 0; row < src.height(); ++row) {
    std::memcpy(&data_[index(x, y + row)], src.row(row),
                static_cast<size_t>(src.width()) * 3);
  }
}

RgbImage RgbImage::Crop(int x, int y, int w, int h) const {
  RgbImage out(w, h);
  for (int row = 0; row < h; ++row) {
    std::memcpy(out.row(row), &data_[index(x, y + row)],
                static_cast<size_t>(w) * 3);
  }
  return out;
}

}  // namespace vtlab
