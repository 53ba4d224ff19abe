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


#include <cmath>

#include <gtest/gtest.h>

#include "vtlab/camera.h"
#include "vtlab_testing/expect_error.h"

namespace vtlab {
namespace {

TEST(CameraTest, DefaultLooksDownNegativeZ) {
  const Camera cam;
  EXPECT_NEAR(cam.forward().z(), -1.0, 1e-15);
  EXPECT_NEAR(cam.right().x(), 1.0, 1e-15);
  EXPECT_NEAR(cam.up().y(), 1.0, 1e-15);
}

TEST(CameraTest, PositiveYawTurnsRightAndPitchLooksUp) {
  Camera cam;
  cam.yaw = DegToRad(90);
  EXPECT_NEAR(cam.forward().x(), 1.0, 1e-12);
  cam.yaw = 0;
  cam.pitch = DegToRad(30);
  EXPECT_GT(cam.forward().y(), 0.0);
  EXPECT_NEAR(cam.forward().dot(cam.up()), 0.0, 1e-12);
  EXPECT_NEAR(cam.right().dot(cam.up()), 0.0, 1e-12);
}

TEST(CameraTest, Validation) {
  Camera cam;
  EXPECT_NO_THROW(cam.Validate());
  cam.near = 2.0;
  cam.far = 1.0;
  EXPECT_VT_ERROR(cam.Validate(), ErrorCode::kDomain);
  cam = Camera{};
  cam.fov_y = kPi;
  EXPECT_VT_ERROR(cam.Validate(), ErrorCode::kDomain);
}

TEST(CameraPathTest, ParsesFramesAndSkipsComments) {
  Camera lens;
  lens.fov_y = DegToRad(75);
  const auto path = ParseCameraPath("# header\n\n1 2 3 90 -10\n  4 5 6 0 0\n", lens);
  ASSERT_EQ(path.size(), 2u);
  EXPECT_EQ(path[0].position, Eigen::Vector3d(1, 2, 3));
  EXPECT_NEAR(path[0].yaw, kPi / 2, 1e-15);
  EXPECT_NEAR(path[0].pitch, DegToRad(-10), 1e-15);
  EXPECT_EQ(path[1].fov_y, lens.fov_y);
}

TEST(CameraPathTest, TextRoundTrip) {
  std::vector<Camera> path(3);
  for (int i = 0; i < 3; ++i) {
    path[i].position = {0.1 * i, 1.7, -2.0 * i};
    path[i].yaw = DegToRad(3.0 * i);
    path[i].pitch = DegToRad(-1.5 * i);
  }
  const auto back = ParseCameraPath(CameraPathToText(path));
  ASSERT_EQ(back.size(), path.size());
  for (size_t i = 0; i < path.size(); ++i) {
    EXPECT_NEAR((back[i].position - path[i].position).norm(), 0.0, 1e-15);
    EXPECT_NEAR(back[i].yaw, path[i].yaw, 1e-15);
    EXPECT_NEAR(back[i].pitch, path[i].pitch, 1e-15);
  }
}

TEST(CameraPathTest, MalformedLineIsFormatError) {
  EXPECT_VT_ERROR(ParseCameraPath("1 2 3 4\n"), ErrorCode::kFormat);
}

}  // namespace
}  // namespace vtlab
