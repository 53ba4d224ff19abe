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

#ifndef VTLAB_IMAGE_H_
#define VTLAB_IMAGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vtlab {

using Rgb8 = std::array<uint8_t, 3>;

// Row-major, top-left origin, tightly packed RGB8 image.
class RgbImage {
 public:
  RgbImage() = default;
  RgbImage(int width, int height, Rgb8 fill = {0, 0, 0});

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return width_ == 0 || height_ == 0; }

  Rgb8 at(int x, int y) const {
    const uint8_t* p = &data_[index(x, y)];
    return {p[0], p[1], p[2]};
  }
  void set(int x, int y, Rgb8 c) {
    uint8_t* p = &data_[index(x, y)];
    p[0] = c[0];
    p[1] = c[1];
    p[2] = c[2];
  }
  // Clamp-to-edge read.
  Rgb8 at_clamped(int64_t x, int64_t y) const;

  uint8_t* row(int y) { return &data_[index(0, y)]; }
  const uint8_t* row(int y) const { return &data_[index(0, y)]; }

  std::span<const uint8_t> bytes() const { return data_; }
  std::span<uint8_t> bytes() { return data_; }

  // Copies `src` with its top-left corner at (x, y). The caller guarantees the
  // destination rectangle lies inside this image.
  void Blit(const RgbImage& src, int x, int y);
  RgbImage Crop(int x, int y, int w, int h) const;

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  size_t index(int x, int y) const {
    return (static_cast<size_t>(y) * width_ + x) * 3;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> data_;
};

// Rec. 601 luma, unrounded.
inline double Luminance(Rgb8 c) {
  return 0.299 * c[0] + 0.587 * c[1] + 0.114 * c[2];
}

// Rec. 601 luma scaled by 1000 so it stays an exact integer.
inline int32_t LuminanceMilli(Rgb8 c) {
  return 299 * c[0] + 587 * c[1] + 114 * c[2];
}

// Round-half-up conversion of a filtered channel value to 8 bits.
inline uint8_t QuantizeChannel(double v) {
  if (v <= 0.0) return 0;
  if (v >= 255.0) return 255;
  return static_cast<uint8_t>(static_cast<int>(v + 0.5));
}

}  // namespace vtlab

#endif  // VTLAB_IMAGE_H_
