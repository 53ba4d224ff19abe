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

// vtlab: build virtual textures, retexture scenes, render references, run
// streaming simulations and evaluate them.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "vtlab/error.h"
#include "vtlab/heuristics.h"
#include "vtlab/stream_queue.h"

namespace {

using vtlab::cli::RunConfig;

// Flag overrides shared by reference and simulate.
struct Overrides {
  std::string config;
  std::string out;
  std::optional<uint64_t> seed;
  std::optional<uint32_t> budget;
  std::optional<std::string> heuristic;
  bool noise = false;
  bool lookahead = false;
  std::optional<std::string> ancestor;
  std::optional<uint32_t> lock_mips;
};

void AddRunFlags(CLI::App* cmd, Overrides& o, bool simulation) {
  cmd->add_option("--config", o.config, "JSON run configuration")->required();
  cmd->add_option("--out", o.out, "output directory (overrides config)");
  if (!simulation) return;
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--budget", o.budget, "pages loaded per frame");
  cmd->add_option("--heuristic", o.heuristic,
                  "random, pixelsum, distance, weightedpixel or hotspot");
  cmd->add_flag("--noise", o.noise, "scale priorities by NoiseValues");
  cmd->add_flag("--lookahead", o.lookahead, "add a LookAhead camera pass");
  cmd->add_option("--ancestor", o.ancestor, "ancestor streaming strategy")
      ->check(CLI::IsMember({"none", "intern", "extern"}));
  cmd->add_option("--lock-mips", o.lock_mips, "pin the first k mip levels");
}

RunConfig Resolve(const Overrides& o) {
  RunConfig config = vtlab::cli::LoadRunConfig(o.config);
  if (!o.out.empty()) config.out = o.out;
  if (o.seed) config.seed = config.heuristic.seed = *o.seed;
  if (o.budget) config.sim.budget = *o.budget;
  if (o.heuristic) config.heuristic.kind = vtlab::ParseHeuristic(*o.heuristic);
  if (o.noise) config.heuristic.noise_scaling = true;
  if (o.lookahead) config.heuristic.lookahead = true;
  if (o.ancestor) config.sim.ancestor = vtlab::ParseAncestorStrategy(*o.ancestor);
  if (o.lock_mips) config.sim.lock_mips = *o.lock_mips;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vtlab: deterministic virtual texturing lab"};
  app.require_subcommand(1);

  vtlab::cli::BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "build a .vtx/.vtn pair from a layout");
  build_cmd->add_option("--layout", build.layout, "layout JSON")->required();
  build_cmd->add_option("--page", build.page_size, "page size in pixels");
  build_cmd->add_option("--border", build.border, "page border in pixels");
  build_cmd->add_option("--out", build.out, "output directory")->required();

  vtlab::cli::RetextureArgs retexture;
  auto* retexture_cmd =
      app.add_subcommand("retexture", "give every face of a scene a unique texture region");
  retexture_cmd->add_option("--scene", retexture.scene, "scene JSON")->required();
  retexture_cmd->add_option("--page", retexture.page_size, "page size in pixels");
  retexture_cmd->add_option("--out", retexture.out, "output directory")->required();

  Overrides reference;
  auto* reference_cmd =
      app.add_subcommand("reference", "render frames with the full texture resident");
  AddRunFlags(reference_cmd, reference, false);

  Overrides simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "run a budgeted streaming simulation");
  AddRunFlags(simulate_cmd, simulate, true);

  vtlab::cli::EvaluateArgs evaluate;
  std::string evaluate_config;
  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "compare test frames against reference frames");
  evaluate_cmd->add_option("--ref", evaluate.reference_dir, "reference frame directory")
      ->required();
  evaluate_cmd->add_option("--test", evaluate.test_dir, "test frame directory")
      ->required();
  evaluate_cmd->add_option("--out", evaluate.out, "report CSV path");
  evaluate_cmd->add_option("--config", evaluate_config, "run configuration (ssim section)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; everything else is a usage error.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build_cmd->parsed()) {
      vtlab::cli::CmdBuild(build, std::cout);
    } else if (retexture_cmd->parsed()) {
      vtlab::cli::CmdRetexture(retexture, std::cout);
    } else if (reference_cmd->parsed()) {
      vtlab::cli::CmdReference(Resolve(reference), std::cout);
    } else if (simulate_cmd->parsed()) {
      vtlab::cli::CmdSimulate(Resolve(simulate), std::cout);
    } else if (evaluate_cmd->parsed()) {
      if (!evaluate_config.empty()) {
        evaluate.params = vtlab::cli::LoadRunConfig(evaluate_config).ssim;
      }
      vtlab::cli::CmdEvaluate(evaluate, std::cout);
    }
  } catch (const vtlab::VtError& e) {
    std::cerr << "vtlab: " << e.what() << '\n';
    return e.code() == vtlab::ErrorCode::kConfig ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "vtlab: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
