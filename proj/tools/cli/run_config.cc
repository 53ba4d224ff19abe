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

#include "run_config.h"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "vtlab/error.h"
#include "vtlab/stream_queue.h"

namespace vtlab::cli {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& field, const std::string& message) {
  throw VtError(ErrorCode::kConfig, "field '" + field + "': " + message);
}

// Reads the keys of one JSON object and remembers which were consumed.
class Section {
 public:
  Section(const json& node, std::string name) : node_(node), name_(std::move(name)) {
    if (!node_.is_object()) Fail(name_.empty() ? "<root>" : name_, "expected an object");
  }

  bool has(const std::string& key) const {
    return node_.contains(key) && !node_.at(key).is_null();
  }

  template <typename T>
  void Read(const std::string& key, T& out) {
    seen_.insert(key);
    if (!has(key)) return;
    try {
      out = node_.at(key).get<T>();
    } catch (const json::exception& e) {
      Fail(Path(key), e.what());
    }
  }

  template <typename T>
  void Read(const std::string& key, std::optional<T>& out) {
    T value{};
    const bool present = has(key);
    Read(key, value);
    if (present) out = value;
  }

  void ReadPath(const std::string& key, const std::filesystem::path& base,
                std::filesystem::path& out) {
    std::string text;
    Read(key, text);
    if (text.empty()) return;
    const std::filesystem::path p(text);
    out = p.is_absolute() ? p : base / p;
  }

  Section Child(const std::string& key) {
    seen_.insert(key);
    return Section(has(key) ? node_.at(key) : Empty(), Path(key));
  }

  std::string Path(const std::string& key) const {
    return name_.empty() ? key : name_ + "." + key;
  }

  // Rejects keys nobody asked for.
  void Finish() const {
    for (const auto& item : node_.items()) {
      if (seen_.count(item.key()) == 0) Fail(Path(item.key()), "unknown key");
    }
  }

 private:
  static const json& Empty() {
    static const json empty = json::object();
    return empty;
  }

  const json& node_;
  std::string name_;
  std::set<std::string> seen_;
};

template <typename Parse, typename T>
void ReadEnum(Section& section, const std::string& key, const std::string& current,
              Parse parse, T& out) {
  std::string name = current;
  section.Read(key, name);
  try {
    out = parse(name);
  } catch (const VtError& e) {
    Fail(section.Path(key), e.what());
  }
}

void RequireFile(const std::filesystem::path& path, const std::string& field) {
  if (path.empty()) Fail(field, "is required");
  if (!std::filesystem::is_regular_file(path)) {
    Fail(field, "file not found: " + path.string());
  }
}

}  // namespace

RunConfig ParseRunConfig(const std::string& json_text,
                         const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw VtError(ErrorCode::kConfig,
                  std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig config;
  Section top(root, "");
  top.ReadPath("texture", base_dir, config.texture);
  top.ReadPath("noise", base_dir, config.noise);
  top.ReadPath("scene", base_dir, config.scene);
  top.ReadPath("path", base_dir, config.camera_path);
  top.ReadPath("out", base_dir, config.out);
  std::vector<int> viewport = {config.viewport.width, config.viewport.height};
  top.Read("viewport", viewport);
  if (viewport.size() != 2) Fail("viewport", "expected [width, height]");
  config.viewport = {viewport[0], viewport[1]};
  ReadEnum(top, "filter", FilterModeName(config.filter), ParseFilterMode,
           config.filter);
  top.Read("seed", config.seed);

  Section camera = top.Child("camera");
  double fov_deg = RadToDeg(config.lens.fov_y);
  camera.Read("fov_deg", fov_deg);
  config.lens.fov_y = DegToRad(fov_deg);
  camera.Read("near", config.lens.near);
  camera.Read("far", config.lens.far);
  camera.Finish();

  Section sim = top.Child("sim");
  SimConfig& s = config.sim;
  sim.Read("budget", s.budget);
  sim.Read("initial_mips", s.initial_mips);
  sim.Read("preload_visible", s.preload_visible);
  sim.Read("lock_mips", s.lock_mips);
  ReadEnum(sim, "ancestor", AncestorStrategyName(s.ancestor),
           ParseAncestorStrategy, s.ancestor);
  sim.Read("noise_skip", s.noise_skip);
  sim.Read("latency", s.latency);
  std::vector<uint32_t> frames = {s.frames_x, s.frames_y};
  sim.Read("cache_frames", frames);
  if (frames.size() != 2) Fail("sim.cache_frames", "expected [x, y]");
  s.frames_x = frames[0];
  s.frames_y = frames[1];
  sim.Finish();

  Section heuristic = top.Child("heuristic");
  HeuristicConfig& h = config.heuristic;
  ReadEnum(heuristic, "kind", HeuristicName(h.kind), ParseHeuristic, h.kind);
  heuristic.Read("noise_scaling", h.noise_scaling);
  heuristic.Read("lookahead", h.lookahead);
  heuristic.Read("lookahead_weight", h.lookahead_weight);
  std::optional<double> damping_deg;
  heuristic.Read("lookahead_damping_deg", damping_deg);
  if (damping_deg) h.lookahead_damping = DegToRad(*damping_deg);
  heuristic.Read("hotspot_gain", h.hotspot_gain);
  heuristic.Finish();

  Section ssim = top.Child("ssim");
  ssim.Read("window", config.ssim.window);
  ssim.Read("stride", config.ssim.stride);
  ssim.Read("k1", config.ssim.k1);
  ssim.Read("k2", config.ssim.k2);
  ssim.Read("weight_floor", config.ssim.weight_floor);
  ssim.Finish();
  top.Finish();

  config.sim.filter = config.filter;
  config.heuristic.seed = config.seed;
  return config;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw VtError(ErrorCode::kConfig, "cannot open config " + path.string());
  }
  std::stringstream text;
  text << in.rdbuf();
  return ParseRunConfig(text.str(), path.parent_path());
}

void ValidateForRender(const RunConfig& config) {
  RequireFile(config.texture, "texture");
  RequireFile(config.scene, "scene");
  RequireFile(config.camera_path, "path");
  try {
    config.viewport.Validate();
  } catch (const VtError& e) {
    Fail("viewport", e.what());
  }
  try {
    config.lens.Validate();
  } catch (const VtError& e) {
    Fail("camera", e.what());
  }
}

void ValidateForSimulation(const RunConfig& config) {
  ValidateForRender(config);
  const auto check = [](const std::string& field, auto&& fn) {
    try {
      fn();
    } catch (const VtError& e) {
      Fail(field, e.what());
    }
  };
  check("sim", [&] { config.sim.Validate(); });
  check("heuristic", [&] { config.heuristic.Validate(); });
  check("ssim", [&] { config.ssim.Validate(); });
  if (config.heuristic.noise_scaling || config.sim.noise_skip) {
    const std::string why = config.heuristic.noise_scaling
                                ? "required when heuristic.noise_scaling is on"
                                : "required when sim.noise_skip is on";
    if (config.noise.empty()) Fail("noise", why);
    if (!std::filesystem::is_regular_file(config.noise)) {
      Fail("noise", "file not found: " + config.noise.string() + " (" + why + ")");
    }
  }
}

}  // namespace vtlab::cli
