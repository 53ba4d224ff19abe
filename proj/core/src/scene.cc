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

#include "vtlab/scene.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vtlab/error.h"

namespace vtlab {

using nlohmann::json;

void SceneMesh::Validate() const {
  for (size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].texture >= textures.size()) {
      throw VtError(ErrorCode::kFormat,
                    "face " + std::to_string(f) + " references missing texture");
    }
    for (const auto& tri : faces[f].triangles) {
      for (uint32_t i : tri) {
        if (i >= vertices.size()) {
          throw VtError(ErrorCode::kFormat, "face " + std::to_string(f) +
                                                " references vertex " +
                                                std::to_string(i));
        }
      }
    }
  }
}

size_t SceneMesh::triangle_count() const {
  size_t n = 0;
  for (const auto& f : faces) n += f.triangles.size();
  return n;
}

SceneMesh ParseSceneJson(const std::string& text) {
  SceneMesh mesh;
  try {
    const json doc = json::parse(text);
    mesh.textures = doc.at("textures").get<std::vector<std::string>>();
    for (const auto& v : doc.at("vertices")) {
      if (v.size() != 5) {
        throw VtError(ErrorCode::kFormat, "vertex needs [x, y, z, s, t]");
      }
      SceneVertex vert;
      for (int i = 0; i < 3; ++i) vert.position[i] = v[i].get<double>();
      for (int i = 0; i < 2; ++i) vert.uv[i] = v[3 + i].get<double>();
      mesh.vertices.push_back(vert);
    }
    for (const auto& f : doc.at("faces")) {
      SceneFace face;
      face.texture = f.at("texture").get<uint32_t>();
      face.triangles =
          f.at("triangles").get<std::vector<std::array<uint32_t, 3>>>();
      mesh.faces.push_back(std::move(face));
    }
  } catch (const json::exception& e) {
    throw VtError(ErrorCode::kFormat, std::string("scene JSON: ") + e.what());
  }
  mesh.Validate();
  return mesh;
}

std::string SceneToJson(const SceneMesh& mesh) {
  json doc;
  doc["textures"] = mesh.textures;
  json verts = json::array();
  for (const auto& v : mesh.vertices) {
    verts.push_back({v.position[0], v.position[1], v.position[2], v.uv[0],
                     v.uv[1]});
  }
  doc["vertices"] = std::move(verts);
  json faces = json::array();
  for (const auto& f : mesh.faces) {
    faces.push_back({{"texture", f.texture}, {"triangles", f.triangles}});
  }
  doc["faces"] = std::move(faces);
  return doc.dump(1);
}

SceneMesh LoadScene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw VtError(ErrorCode::kIo, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseSceneJson(ss.str());
}

void SaveScene(const std::filesystem::path& path, const SceneMesh& mesh) {
  std::ofstream out(path);
  out << SceneToJson(mesh) << '\n';
  if (!out) throw VtError(ErrorCode::kIo, "cannot write " + path.string());
}

}  // namespace vtlab
