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

#include "vtlab/camera.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <Eigen/Geometry>

#include "vtlab/error.h"

namespace vtlab {

void Camera::Validate() const {
  if (!(near > 0.0 && near < far)) {
    throw VtError(ErrorCode::kDomain, "camera needs 0 < near < far");
  }
  if (!(fov_y > 0.0 && fov_y < kPi)) {
    throw VtError(ErrorCode::kDomain, "camera fov must lie in (0, pi)");
  }
}

Eigen::Vector3d Camera::forward() const {
  return {std::sin(yaw) * std::cos(pitch), std::sin(pitch),
          -std::cos(yaw) * std::cos(pitch)};
}

Eigen::Vector3d Camera::right() const {
  return {std::cos(yaw), 0.0, std::sin(yaw)};
}

Eigen::Vector3d Camera::up() const { return right().cross(forward()); }

std::vector<Camera> ParseCameraPath(const std::string& text, const Camera& lens) {
  std::vector<Camera> frames;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double x, y, z, yaw_deg, pitch_deg;
    if (!(fields >> x >> y >> z >> yaw_deg >> pitch_deg)) {
      throw VtError(ErrorCode::kFormat,
                    "camera path line " + std::to_string(line_no) +
                        ": expected 'x y z yaw pitch'");
    }
    Camera cam = lens;
    cam.position = {x, y, z};
    cam.yaw = DegToRad(yaw_deg);
    cam.pitch = DegToRad(pitch_deg);
    frames.push_back(cam);
  }
  return frames;
}

std::string CameraPathToText(const std::vector<Camera>& path) {
  std::ostringstream out;
  out << "# x y z yaw_deg pitch_deg\n" << std::setprecision(17);
  for (const Camera& c : path) {
    out << c.position.x() << ' ' << c.position.y() << ' ' << c.position.z()
        << ' ' << RadToDeg(c.yaw) << ' ' << RadToDeg(c.pitch) << '\n';
  }
  return out.str();
}

std::vector<Camera> LoadCameraPath(const std::filesystem::path& path,
                                   const Camera& lens) {
  std::ifstream in(path);
  if (!in) throw VtError(ErrorCode::kIo, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseCameraPath(ss.str(), lens);
}

void SaveCameraPath(const std::filesystem::path& path,
                    const std::vector<Camera>& frames) {
  std::ofstream out(path);
  out << CameraPathToText(frames);
  if (!out) throw VtError(ErrorCode::kIo, "cannot write " + path.string());
}

}  // namespace vtlab
