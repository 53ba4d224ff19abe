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

#include "vtlab/raster.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "vtlab/error.h"

namespace vtlab {
namespace {

// View-space vertex: (x right, y up, depth along the view direction).
struct ViewVert {
  double x, y, depth, s, t;
};

struct ScreenVert {
  double x, y;   // pixels, y down
  double invw;   // 1 / depth
  double sw, tw; // s / depth, t / depth
};

ViewVert Lerp(const ViewVert& a, const ViewVert& b, double f) {
  return {a.x + (b.x - a.x) * f, a.y + (b.y - a.y) * f,
          a.depth + (b.depth - a.depth) * f, a.s + (b.s - a.s) * f,
          a.t + (b.t - a.t) * f};
}

// Sutherland-Hodgman against depth >= near. A triangle becomes at most a
// quadrilateral.
int ClipNear(const std::array<ViewVert, 3>& in, double near,
             std::array<ViewVert, 4>& out) {
  int n = 0;
  for (int i = 0; i < 3; ++i) {
    const ViewVert& a = in[i];
    const ViewVert& b = in[(i + 1) % 3];
    const bool a_in = a.depth >= near;
    const bool b_in = b.depth >= near;
    if (a_in) out[n++] = a;
    if (a_in != b_in) {
      out[n++] = Lerp(a, b, (near - a.depth) / (b.depth - a.depth));
    }
  }
  return n;
}

// Linear function over the screen: v(x, y) = v0 + dx * (x - x0) + dy * (y - y0).
struct Plane {
  double v0, dx, dy;
  double at(double x, double y, double x0, double y0) const {
    return v0 + dx * (x - x0) + dy * (y - y0);
  }
};

Plane MakePlane(const ScreenVert& a, const ScreenVert& b, const ScreenVert& c,
                double va, double vb, double vc, double inv_area) {
  const double e1x = b.x - a.x, e1y = b.y - a.y;
  const double e2x = c.x - a.x, e2y = c.y - a.y;
  const double d1 = vb - va, d2 = vc - va;
  return {va, (d1 * e2y - d2 * e1y) * inv_area, (d2 * e1x - d1 * e2x) * inv_area};
}

// Edge function of a->b at p; positive on the inner side once the triangle
// is oriented with positive area.
double Edge(const ScreenVert& a, const ScreenVert& b, double px, double py) {
  return (b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x);
}

// With y pointing down and positive area, top edges run in +x and left edges
// run in -y.
bool IsTopLeft(const ScreenVert& a, const ScreenVert& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return dy < 0.0 || (dy == 0.0 && dx > 0.0);
}

bool Inside(double w, bool top_left) { return w > 0.0 || (w == 0.0 && top_left); }

class TriangleRasterizer {
 public:
  TriangleRasterizer(FragmentBuffer& buffer, double far_depth)
      : buffer_(buffer), far_(far_depth) {}

  void Draw(ScreenVert a, ScreenVert b, ScreenVert c, uint32_t triangle) {
    double area = Edge(a, b, c.x, c.y);
    if (!(std::abs(area) > 1e-12) || !std::isfinite(area)) return;
    if (area < 0.0) {
      std::swap(b, c);
      area = -area;
    }
    const Viewport& vp = buffer_.viewport();
    const double min_x = std::min({a.x, b.x, c.x});
    const double max_x = std::max({a.x, b.x, c.x});
    const double min_y = std::min({a.y, b.y, c.y});
    const double max_y = std::max({a.y, b.y, c.y});
    const int x_begin = std::max(0, static_cast<int>(std::ceil(min_x - 0.5)));
    const int x_end =
        std::min(vp.width - 1, static_cast<int>(std::floor(max_x - 0.5)));
    const int y_begin = std::max(0, static_cast<int>(std::ceil(min_y - 0.5)));
    const int y_end =
        std::min(vp.height - 1, static_cast<int>(std::floor(max_y - 0.5)));
    if (x_begin > x_end || y_begin > y_end) return;

    const double inv_area = 1.0 / area;
    const Plane invw = MakePlane(a, b, c, a.invw, b.invw, c.invw, inv_area);
    const Plane sw = MakePlane(a, b, c, a.sw, b.sw, c.sw, inv_area);
    const Plane tw = MakePlane(a, b, c, a.tw, b.tw, c.tw, inv_area);
    const bool tl_ab = IsTopLeft(a, b);
    const bool tl_bc = IsTopLeft(b, c);
    const bool tl_ca = IsTopLeft(c, a);
    const double x0 = a.x;
    const double y0 = a.y;

    // (s, t) at any pixel center, covered or not.
    auto eval = [&](int px, int py, double& s, double& t) {
      const double cx = px + 0.5, cy = py + 0.5;
      const double w = invw.at(cx, cy, x0, y0);
      if (!(w > 0.0)) return false;
      s = sw.at(cx, cy, x0, y0) / w;
      t = tw.at(cx, cy, x0, y0) / w;
      return true;
    };
    // Analytic derivative, used when a helper pixel lies beyond the horizon.
    auto analytic = [&](double cx, double cy, double& dsdx, double& dtdx,
                        double& dsdy, double& dtdy) {
      const double w = invw.at(cx, cy, x0, y0);
      const double s = sw.at(cx, cy, x0, y0) / w;
      const double t = tw.at(cx, cy, x0, y0) / w;
      dsdx = (sw.dx - s * invw.dx) / w;
      dtdx = (tw.dx - t * invw.dx) / w;
      dsdy = (sw.dy - s * invw.dy) / w;
      dtdy = (tw.dy - t * invw.dy) / w;
    };

    for (int py = y_begin; py <= y_end; ++py) {
      const double cy = py + 0.5;
      for (int px = x_begin; px <= x_end; ++px) {
        const double cx = px + 0.5;
        if (!Inside(Edge(a, b, cx, cy), tl_ab) ||
            !Inside(Edge(b, c, cx, cy), tl_bc) ||
            !Inside(Edge(c, a, cx, cy), tl_ca)) {
          continue;
        }
        const double w = invw.at(cx, cy, x0, y0);
        if (!(w > 0.0)) continue;
        const double depth = 1.0 / w;
        Fragment& frag = buffer_.at(px, py);
        if (!(depth < frag.depth) || depth > far_) continue;

        frag.covered = true;
        frag.triangle = triangle;
        frag.depth = depth;
        frag.s = sw.at(cx, cy, x0, y0) / w;
        frag.t = tw.at(cx, cy, x0, y0) / w;

        const int qx = px & ~1;
        const int qy = py & ~1;
        double s0, t0, s1, t1, s2, t2, s3, t3;
        double adsdx, adtdx, adsdy, adtdy;
        bool have_analytic = false;
        if (eval(qx, py, s0, t0) && eval(qx + 1, py, s1, t1)) {
          frag.dsdx = s1 - s0;
          frag.dtdx = t1 - t0;
        } else {
          analytic(cx, cy, adsdx, adtdx, adsdy, adtdy);
          have_analytic = true;
          frag.dsdx = adsdx;
          frag.dtdx = adtdx;
        }
        if (eval(px, qy, s2, t2) && eval(px, qy + 1, s3, t3)) {
          frag.dsdy = s3 - s2;
          frag.dtdy = t3 - t2;
        } else {
          if (!have_analytic) analytic(cx, cy, adsdx, adtdx, adsdy, adtdy);
          frag.dsdy = adsdy;
          frag.dtdy = adtdy;
        }
      }
    }
  }

 private:
  FragmentBuffer& buffer_;
  double far_;
};

}  // namespace

void Viewport::Validate() const {
  if (width <= 0 || height <= 0 || width % 2 != 0 || height % 2 != 0) {
    throw VtError(ErrorCode::kDomain, "viewport sides must be positive and even");
  }
}

FragmentBuffer::FragmentBuffer(Viewport viewport, double far_depth)
    : viewport_(viewport),
      fragments_(static_cast<size_t>(viewport.width) * viewport.height) {
  for (Fragment& f : fragments_) f.depth = far_depth;
}

FragmentBuffer Rasterize(const SceneMesh& scene, const Camera& camera,
                         Viewport viewport) {
  viewport.Validate();
  camera.Validate();
  FragmentBuffer buffer(viewport, camera.far);
  TriangleRasterizer raster(buffer, camera.far);

  const Eigen::Vector3d right = camera.right();
  const Eigen::Vector3d up = camera.up();
  const Eigen::Vector3d forward = camera.forward();
  const double tan_half = std::tan(camera.fov_y / 2.0);
  const double aspect =
      static_cast<double>(viewport.width) / static_cast<double>(viewport.height);
  const double half_w = 0.5 * viewport.width;
  const double half_h = 0.5 * viewport.height;

  auto to_view = [&](const SceneVertex& v) {
    const Eigen::Vector3d d =
        Eigen::Vector3d(v.position[0], v.position[1], v.position[2]) -
        camera.position;
    return ViewVert{d.dot(right), d.dot(up), d.dot(forward), v.uv[0], v.uv[1]};
  };
  auto to_screen = [&](const ViewVert& v) {
    const double invw = 1.0 / v.depth;
    return ScreenVert{(v.x * invw / (tan_half * aspect) + 1.0) * half_w,
                      (1.0 - v.y * invw / tan_half) * half_h, invw,
                      v.s * invw, v.t * invw};
  };

  uint32_t triangle = 0;
  for (const SceneFace& face : scene.faces) {
    for (const auto& tri : face.triangles) {
      const std::array<ViewVert, 3> view = {to_view(scene.vertices[tri[0]]),
                                            to_view(scene.vertices[tri[1]]),
                                            to_view(scene.vertices[tri[2]])};
      std::array<ViewVert, 4> clipped;
      const int n = ClipNear(view, camera.near, clipped);
      if (n >= 3) {
        const ScreenVert v0 = to_screen(clipped[0]);
        for (int i = 1; i + 1 < n; ++i) {
          raster.Draw(v0, to_screen(clipped[i]), to_screen(clipped[i + 1]),
                      triangle);
        }
      }
      ++triangle;
    }
  }
  return buffer;
}

}  // namespace vtlab
