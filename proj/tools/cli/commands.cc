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

#include "commands.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "vtlab/build.h"
#include "vtlab/error.h"
#include "vtlab/layout.h"
#include "vtlab/png_io.h"
#include "vtlab/render.h"
#include "vtlab/scene.h"
#include "vtlab/simulate.h"
#include "vtlab/vtx_file.h"

namespace vtlab::cli {
namespace {

std::ofstream OpenOut(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw VtError(ErrorCode::kIo, "cannot write " + path.string());
  return out;
}

void RequireOut(const std::filesystem::path& out) {
  if (out.empty()) throw VtError(ErrorCode::kConfig, "field 'out': is required");
  std::filesystem::create_directories(out);
}

}  // namespace

std::filesystem::path FramePath(const std::filesystem::path& dir, uint64_t frame) {
  char name[32];
  std::snprintf(name, sizeof(name), "frame_%05llu.png",
                static_cast<unsigned long long>(frame));
  return dir / name;
}

std::vector<std::filesystem::path> ListFrames(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw VtError(ErrorCode::kIo, "not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.rfind("frame_", 0) == 0 &&
        entry.path().extension() == ".png") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void CmdBuild(const BuildArgs& args, std::ostream& log) {
  RequireOut(args.out);
  const LayoutFile layout = LoadLayout(args.layout);
  const BuildResult result =
      BuildVirtualTexture(layout, args.layout.parent_path(), args.page_size,
                          args.border, args.out / "texture.vtx",
                          args.out / "texture.vtn");
  log << "built " << result.pages << " pages, " << result.meta.mip_count
      << " mips, top mip " << result.meta.dim_max() << " px\n";
}

void CmdRetexture(const RetextureArgs& args, std::ostream& log) {
  RequireOut(args.out);
  const SceneMesh scene = LoadScene(args.scene);
  const std::vector<RgbImage> sources =
      LoadSceneTextures(scene, args.scene.parent_path());
  const RetextureResult result = Retexture(scene, sources, args.page_size);
  WriteRetexture(result, args.out);
  log << "retextured " << result.placements.size() << " faces into a "
      << result.layout.target_dim << " px layout";
  if (!result.degenerate_faces.empty()) {
    log << " (" << result.degenerate_faces.size() << " degenerate)";
  }
  log << '\n';
}

void CmdReference(const RunConfig& config, std::ostream& log) {
  ValidateForRender(config);
  RequireOut(config.out);
  const SceneMesh scene = LoadScene(config.scene);
  const std::vector<Camera> path = LoadCameraPath(config.camera_path, config.lens);
  const VtxReader reader(config.texture);
  const MipChain chain = ReadMipChain(reader);
  const ChainSampler sampler(chain);
  for (size_t f = 0; f < path.size(); ++f) {
    const FrameBuffers frame =
        RenderFrame(scene, path[f], config.viewport, sampler, config.filter);
    WritePng(FramePath(config.out, f), frame.color);
  }
  log << "rendered " << path.size() << " reference frames\n";
}

void CmdSimulate(const RunConfig& config, std::ostream& log) {
  ValidateForSimulation(config);
  RequireOut(config.out);
  const SceneMesh scene = LoadScene(config.scene);
  const std::vector<Camera> path = LoadCameraPath(config.camera_path, config.lens);
  const VtxReader reader(config.texture);
  NoiseTable noise;
  SimInputs inputs;
  inputs.scene = &scene;
  inputs.path = &path;
  inputs.viewport = config.viewport;
  inputs.source = &reader;
  if (!config.noise.empty()) {
    noise = ReadNoise(config.noise, reader.meta().total_pages());
    inputs.noise = &noise;
  }
  SimConfig sim = config.sim;
  sim.filter = config.filter;
  const SimResult result =
      Simulate(inputs, sim, config.heuristic, [&](uint64_t f, const RgbImage& color) {
        WritePng(FramePath(config.out, f), color);
      });

  std::ofstream stream_log = OpenOut(config.out / "stream_log.csv");
  WriteStreamLog(stream_log, result.log, HeuristicName(config.heuristic.kind));
  std::ofstream stats = OpenOut(config.out / "frame_stats.csv");
  stats << "frame,hits,misses,loads,resident\n";
  for (size_t f = 0; f < result.stats.size(); ++f) {
    const FrameStats& s = result.stats[f];
    stats << f << ',' << s.hits << ',' << s.misses << ',' << s.loads << ','
          << s.resident << '\n';
  }
  log << "simulated " << path.size() << " frames, " << result.log.size()
      << " pages streamed\n";
}

std::vector<QualityRecord> CmdEvaluate(const EvaluateArgs& args, std::ostream& log) {
  const auto reference = ListFrames(args.reference_dir);
  const auto test = ListFrames(args.test_dir);
  if (reference.size() != test.size()) {
    throw VtError(ErrorCode::kDomain,
                  "reference has " + std::to_string(reference.size()) +
                      " frames, test has " + std::to_string(test.size()));
  }
  std::vector<QualityRecord> records;
  for (size_t i = 0; i < reference.size(); ++i) {
    records.push_back(
        Evaluate(i, ReadPng(reference[i]), ReadPng(test[i]), args.params));
  }
  if (!args.out.empty()) {
    if (args.out.has_parent_path()) {
      std::filesystem::create_directories(args.out.parent_path());
    }
    std::ofstream out = OpenOut(args.out);
    WriteReportCsv(out, records);
  }
  const QualityRecord mean = MeanRecord(records);
  log << "evaluated " << records.size() << " frames: mean rmse " << mean.rmse
      << ", mean ssim " << mean.ssim << ", mean wssim " << mean.wssim << '\n';
  return records;
}

}  // namespace vtlab::cli
