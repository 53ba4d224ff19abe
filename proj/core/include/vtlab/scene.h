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

#ifndef VTLAB_SCENE_H_
#define VTLAB_SCENE_H_

// Neutral triangle-mesh scene format.
//
//   {
//     "textures": ["rock.png", "wall.png"],
//     "vertices": [[x, y, z, s, t], ...],
//     "faces": [{"texture": 0, "triangles": [[0, 1, 2], [0, 2, 3]]}, ...]
//   }
//
// A face is a group of triangles sharing one source texture. After
// retexturing every face owns a unique region and the (s, t) pairs are
// virtual-texture coordinates in [0, 1].

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace vtlab {

struct SceneVertex {
  std::array<double, 3> position{};
  std::array<double, 2> uv{};

  friend bool operator==(const SceneVertex&, const SceneVertex&) = default;
};

struct SceneFace {
  uint32_t texture = 0;
  std::vector<std::array<uint32_t, 3>> triangles;

  friend bool operator==(const SceneFace&, const SceneFace&) = default;
};

struct SceneMesh {
  std::vector<std::string> textures;
  std::vector<SceneVertex> vertices;
  std::vector<SceneFace> faces;

  // Throws VtError(kFormat) for out-of-range vertex or texture references.
  void Validate() const;
  size_t triangle_count() const;

  friend bool operator==(const SceneMesh&, const SceneMesh&) = default;
};

SceneMesh ParseSceneJson(const std::string& text);
std::string SceneToJson(const SceneMesh& mesh);
SceneMesh LoadScene(const std::filesystem::path& path);
void SaveScene(const std::filesystem::path& path, const SceneMesh& mesh);

}  // namespace vtlab

#endif  // VTLAB_SCENE_H_
