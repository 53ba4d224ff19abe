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

#ifndef VTLAB_CAMERA_H_
#define VTLAB_CAMERA_H_

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace vtlab {

inline constexpr double kPi = 3.14159265358979323846;

inline double DegToRad(double deg) { return deg * kPi / 180.0; }
inline double RadToDeg(double rad) { return rad * 180.0 / kPi; }

// First-person pinhole camera. With yaw = pitch = 0 it looks down -z with +y
// up. Positive yaw turns right (towards +x), positive pitch looks up.
struct Camera {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double yaw = 0.0;    // radians
  double pitch = 0.0;  // radians
  double fov_y = DegToRad(60.0);
  double near = 0.05;
  double far = 1000.0;

  // Throws kDomain unless 0 < near < far and fov_y in (0, pi).
  void Validate() const;

  Eigen::Vector3d forward() const;
  Eigen::Vector3d right() const;
  Eigen::Vector3d up() const;

  friend bool operator==(const Camera&, const Camera&) = default;
};

// Camera path text format: one frame per line, "x y z yaw pitch" with the
// angles in degrees. Blank lines and lines starting with '#' are ignored.
// Lens parameters (fov, near, far) are copied from `lens`.
std::vector<Camera> ParseCameraPath(const std::string& text,
                                    const Camera& lens = {});
std::string CameraPathToText(const std::vector<Camera>& path);
std::vector<Camera> LoadCameraPath(const std::filesystem::path& path,
                                   const Camera& lens = {});
void SaveCameraPath(const std::filesystem::path& path,
                    const std::vector<Camera>& frames);

}  // namespace vtlab

#endif  // VTLAB_CAMERA_H_
