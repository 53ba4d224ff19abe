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

#ifndef VTLAB_VTX_FILE_H_
#define VTLAB_VTX_FILE_H_

// On-disk virtual texture (.vtx) and NoiseValue sidecar (.vtn).
//
// .vtx layout, all integers little-endian:
//   0   char[4]  magic "VTX1"
//   4   u32      version (1)
//   8   u32      page_size
//   12  u32      border
//   16  u32      mip_count
//   20  u32      bytes_per_pixel
//   24  u8[40]   reserved, zero
//   64  pages    every bordered page in absolute-index order, each
//                (page_size + 2 * border)^2 RGB8 texels, row-major
//
// .vtn layout:
//   0   char[4]  magic "VTN1"
//   4   u32      version (1)
//   8   u64      count
//   16  f32[count] one value per page in absolute-index order

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <vector>

#include "vtlab/page.h"

namespace vtlab {

inline constexpr uint32_t kVtxVersion = 1;
inline constexpr uint32_t kVtnVersion = 1;
inline constexpr size_t kVtxHeaderSize = 64;
inline constexpr size_t kVtnHeaderSize = 16;

// A bordered page: (page_size + 2 * border)^2 RGB8 texels, row-major.
struct PagePayload {
  PageId id;
  std::vector<uint8_t> pixels;

  friend bool operator==(const PagePayload&, const PagePayload&) = default;
};

// Byte offset of page `abs` in a .vtx file. Pages are stored with their
// borders, so the stride is the bordered page size.
uint64_t PageFileOffset(const TextureMeta& meta, uint64_t abs);

std::array<uint8_t, kVtxHeaderSize> EncodeVtxHeader(const TextureMeta& meta);
// Throws kFormat on bad magic, version or field values.
TextureMeta DecodeVtxHeader(std::span<const uint8_t> bytes);

// Anything pages can be streamed from.
class PageSource {
 public:
  virtual ~PageSource() = default;
  virtual const TextureMeta& meta() const = 0;
  virtual PagePayload ReadPage(uint64_t abs) const = 0;
};

// Streams pages into a .vtx file. Pages must arrive in ascending absolute
// order with no gaps; Finish() checks that the pyramid is complete.
class VtxWriter {
 public:
  VtxWriter(const std::filesystem::path& path, const TextureMeta& meta);

  void Append(const PagePayload& page);
  void Finish();

  uint64_t pages_written() const { return next_abs_; }

 private:
  std::filesystem::path path_;
  TextureMeta meta_;
  std::ofstream out_;
  uint64_t next_abs_ = 0;
};

// Random-access page reader. ReadPage() is safe to call from several threads.
class VtxReader : public PageSource {
 public:
  explicit VtxReader(const std::filesystem::path& path);
  ~VtxReader() override;
  VtxReader(const VtxReader&) = delete;
  VtxReader& operator=(const VtxReader&) = delete;

  const TextureMeta& meta() const override { return meta_; }
  // Throws kRange for indices past the pyramid and kIo for short reads.
  PagePayload ReadPage(uint64_t abs) const override;

 private:
  std::filesystem::path path_;
  int fd_ = -1;
  TextureMeta meta_;
};

// One NoiseValue per page; see ComputeNoise().
struct NoiseTable {
  std::vector<float> values;

  size_t size() const { return values.size(); }
  float operator[](size_t abs) const { return values[abs]; }
  double Mean() const;

  friend bool operator==(const NoiseTable&, const NoiseTable&) = default;
};

void WriteNoise(const std::filesystem::path& path, const NoiseTable& table);
// When `expected_count` is set (the companion texture's page count) a
// mismatching sidecar is rejected with kFormat.
NoiseTable ReadNoise(const std::filesystem::path& path,
                     std::optional<uint64_t> expected_count = std::nullopt);

}  // namespace vtlab

#endif  // VTLAB_VTX_FILE_H_
