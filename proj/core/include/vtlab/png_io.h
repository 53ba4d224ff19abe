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

#ifndef VTLAB_PNG_IO_H_
#define VTLAB_PNG_IO_H_

#include <filesystem>

#include "vtlab/image.h"

namespace vtlab {

// Decodes any PNG libpng understands into RGB8 (alpha is dropped, palettes
// and 16-bit samples are converted). Throws VtError(kIo / kFormat).
RgbImage ReadPng(const std::filesystem::path& path);

void WritePng(const std::filesystem::path& path, const RgbImage& image);

}  // namespace vtlab

#endif  // VTLAB_PNG_IO_H_
