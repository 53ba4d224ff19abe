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

#ifndef VTLAB_TOOLS_CLI_COMMANDS_H_
#define VTLAB_TOOLS_CLI_COMMANDS_H_

// Subcommand implementations, kept separate from argument parsing so they
// can be driven from tests.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "run_config.h"
#include "vtlab/metrics.h"

namespace vtlab::cli {

struct BuildArgs {
  std::filesystem::path layout;
  uint32_t page_size = 128;
  uint32_t border = 4;
  std::filesystem::path out;  // directory; receives texture.vtx and texture.vtn
};
void CmdBuild(const BuildArgs& args, std::ostream& log);

struct RetextureArgs {
  std::filesystem::path scene;  // textures resolve relative to its directory
  uint32_t page_size = 128;
  std::filesystem::path out;
};
void CmdRetexture(const RetextureArgs& args, std::ostream& log);

// Renders every camera of the path with the whole texture available and
// writes out/frame_NNNNN.png.
void CmdReference(const RunConfig& config, std::ostream& log);

// Runs the streaming simulation and writes out/frame_NNNNN.png,
// out/stream_log.csv and out/frame_stats.csv.
void CmdSimulate(const RunConfig& config, std::ostream& log);

struct EvaluateArgs {
  std::filesystem::path reference_dir;
  std::filesystem::path test_dir;
  std::filesystem::path out;  // CSV file
  SsimParams params;
};
std::vector<QualityRecord> CmdEvaluate(const EvaluateArgs& args, std::ostream& log);

// frame_*.png files of a directory in name order.
std::vector<std::filesystem::path> ListFrames(const std::filesystem::path& dir);
std::filesystem::path FramePath(const std::filesystem::path& dir, uint64_t frame);

}  // namespace vtlab::cli

#endif  // VTLAB_TOOLS_CLI_COMMANDS_H_
