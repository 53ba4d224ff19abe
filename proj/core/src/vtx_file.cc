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

#include "vtlab/vtx_file.h"

#include <fcntl.h>
#include <unistd.h>

#include <bit>
#include <cstring>
#include <numeric>
#include <string>

#include "vtlab/error.h"

namespace vtlab {
namespace {

constexpr char kVtxMagic[4] = {'V', 'T', 'X', '1'};
constexpr char kVtnMagic[4] = {'V', 'T', 'N', '1'};

void PutU32(uint8_t* p, uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<uint8_t>(v >> (8 * i));
}
void PutU64(uint8_t* p, uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<uint8_t>(v >> (8 * i));
}
uint32_t GetU32(const uint8_t* p) {
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= uint32_t{p[i]} << (8 * i);
  return v;
}
uint64_t GetU64(const uint8_t* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= uint64_t{p[i]} << (8 * i);
  return v;
}

}  // namespace

uint64_t PageFileOffset(const TextureMeta& meta, uint64_t abs) {
  return kVtxHeaderSize + meta.page_bytes() * abs;
}

std::array<uint8_t, kVtxHeaderSize> EncodeVtxHeader(const TextureMeta& meta) {
  std::array<uint8_t, kVtxHeaderSize> h{};
  std::memcpy(h.data(), kVtxMagic, 4);
  PutU32(&h[4], kVtxVersion);
  PutU32(&h[8], meta.page_size);
  PutU32(&h[12], meta.border);
  PutU32(&h[16], meta.mip_count);
  PutU32(&h[20], meta.bytes_per_pixel);
  return h;
}

TextureMeta DecodeVtxHeader(std::span<const uint8_t> bytes) {
  if (bytes.size() < kVtxHeaderSize) {
    throw VtError(ErrorCode::kFormat, "header shorter than 64 bytes");
  }
  if (std::memcmp(bytes.data(), kVtxMagic, 4) != 0) {
    throw VtError(ErrorCode::kFormat, "bad magic, expected VTX1");
  }
  const uint32_t version = GetU32(&bytes[4]);
  if (version != kVtxVersion) {
    throw VtError(ErrorCode::kFormat,
                  "unsupported version " + std::to_string(version));
  }
  TextureMeta meta;
  meta.page_size = GetU32(&bytes[8]);
  meta.border = GetU32(&bytes[12]);
  meta.mip_count = GetU32(&bytes[16]);
  meta.bytes_per_pixel = GetU32(&bytes[20]);
  try {
    meta.Validate();
  } catch (const VtError& e) {
    throw VtError(ErrorCode::kFormat, std::string("bad header: ") + e.what());
  }
  return meta;
}

VtxWriter::VtxWriter(const std::filesystem::path& path, const TextureMeta& meta)
    : path_(path), meta_(meta) {
  meta_.Validate();
  out_.open(path, std::ios::binary | std::ios::trunc);
  if (!out_) throw VtError(ErrorCode::kIo, "cannot create " + path.string());
  const auto header = EncodeVtxHeader(meta_);
  out_.write(reinterpret_cast<const char*>(header.data()), header.size());
}

void VtxWriter::Append(const PagePayload& page) {
  const uint64_t abs = AbsIndex(page.id, meta_.mip_count);
  if (abs != next_abs_) {
    throw VtError(ErrorCode::kContract,
                  "pages must be appended in absolute order: expected " +
                      std::to_string(next_abs_) + ", got " +
                      std::to_string(abs));
  }
  if (page.pixels.size() != meta_.page_bytes()) {
    throw VtError(ErrorCode::kContract, "page payload has wrong byte length");
  }
  out_.write(reinterpret_cast<const char*>(page.pixels.data()),
             static_cast<std::streamsize>(page.pixels.size()));
  if (!out_) throw VtError(ErrorCode::kIo, "write failed on " + path_.string());
  ++next_abs_;
}

void VtxWriter::Finish() {
  if (next_abs_ != meta_.total_pages()) {
    throw VtError(ErrorCode::kContract,
                  "pyramid incomplete: " + std::to_string(next_abs_) + " of " +
                      std::to_string(meta_.total_pages()) + " pages written");
  }
  out_.flush();
  out_.close();
  if (!out_) throw VtError(ErrorCode::kIo, "close failed on " + path_.string());
}

VtxReader::VtxReader(const std::filesystem::path& path) : path_(path) {
  fd_ = ::open(path.c_str(), O_RDONLY);
  if (fd_ < 0) throw VtError(ErrorCode::kIo, "cannot open " + path.string());
  std::array<uint8_t, kVtxHeaderSize> header{};
  const ssize_t n = ::pread(fd_, header.data(), header.size(), 0);
  if (n != static_cast<ssize_t>(header.size())) {
    ::close(fd_);
    throw VtError(ErrorCode::kIo, "truncated header in " + path.string());
  }
  try {
    meta_ = DecodeVtxHeader(header);
  } catch (...) {
    ::close(fd_);
    throw;
  }
}

VtxReader::~VtxReader() {
  if (fd_ >= 0) ::close(fd_);
}

PagePayload VtxReader::ReadPage(uint64_t abs) const {
  PagePayload page;
  page.id = FromAbs(abs, meta_.mip_count);  // kRange past the end
  page.pixels.resize(meta_.page_bytes());
  size_t done = 0;
  const uint64_t offset = PageFileOffset(meta_, abs);
  while (done < page.pixels.size()) {
    const ssize_t n = ::pread(fd_, page.pixels.data() + done,
                              page.pixels.size() - done,
                              static_cast<off_t>(offset + done));
    if (n <= 0) {
      throw VtError(ErrorCode::kIo, "truncated page " + std::to_string(abs) +
                                        " in " + path_.string());
    }
    done += static_cast<size_t>(n);
  }
  return page;
}

double NoiseTable::Mean() const {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (float v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

void WriteNoise(const std::filesystem::path& path, const NoiseTable& table) {
  std::vector<uint8_t> bytes(kVtnHeaderSize + 4 * table.size());
  std::memcpy(bytes.data(), kVtnMagic, 4);
  PutU32(&bytes[4], kVtnVersion);
  PutU64(&bytes[8], table.size());
  for (size_t i = 0; i < table.size(); ++i) {
    PutU32(&bytes[kVtnHeaderSize + 4 * i], std::bit_cast<uint32_t>(table[i]));
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw VtError(ErrorCode::kIo, "cannot write " + path.string());
}

NoiseTable ReadNoise(const std::filesystem::path& path,
                     std::optional<uint64_t> expected_count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw VtError(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (bytes.size() < kVtnHeaderSize ||
      std::memcmp(bytes.data(), kVtnMagic, 4) != 0) {
    throw VtError(ErrorCode::kFormat, path.string() + " is not a VTN1 file");
  }
  if (GetU32(&bytes[4]) != kVtnVersion) {
    throw VtError(ErrorCode::kFormat, "unsupported sidecar version");
  }
  const uint64_t count = GetU64(&bytes[8]);
  if (expected_count && count != *expected_count) {
    throw VtError(ErrorCode::kFormat,
                  "sidecar holds " + std::to_string(count) +
                      " values but the texture has " +
                      std::to_string(*expected_count) + " pages");
  }
  if (bytes.size() != kVtnHeaderSize + 4 * count) {
    throw VtError(ErrorCode::kIo, "truncated sidecar " + path.string());
  }
  NoiseTable table;
  table.values.resize(count);
  for (uint64_t i = 0; i < count; ++i) {
    table.values[i] =
        std::bit_cast<float>(GetU32(&bytes[kVtnHeaderSize + 4 * i]));
  }
  return table;
}

}  // namespace vtlab
